#include "sqcat/numerics.hpp"

#include "sqcat/error.hpp"

#include <cmath>
#include <sstream>

namespace sqcat {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidDims: return "InvalidDims";
    case ErrorKind::TruncationLeakage: return "TruncationLeakage";
    case ErrorKind::ResonanceSingularity: return "ResonanceSingularity";
    case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorKind::NonRealBeta: return "NonRealBeta";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::LeakageAbort: return "LeakageAbort";
    case ErrorKind::ZeroProbabilityCollapse: return "ZeroProbabilityCollapse";
    case ErrorKind::TrustRegionViolation: return "TrustRegionViolation";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Complex ScalarFunction::operator()(double x) const {
  switch (kind) {
    case Kind::ExpIScale: return std::exp(kI * (scale * x));
    case Kind::Cos: return std::cos(x);
    case Kind::Sin: return std::sin(x);
    case Kind::ExpRealScale: return std::exp(scale * x);
  }
  return 0.0;
}

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

Matrix dagger(const Matrix& m) { return m.adjoint(); }

bool all_finite(const Matrix& m) { return m.allFinite(); }

double hermiticity_defect(const Matrix& m) { return (m - m.adjoint()).norm(); }

double unitarity_defect(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.rows())).norm();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// First component with modulus above the noise floor is rotated onto the
// positive real axis.
void fix_phase(Eigen::Ref<Vector> v) {
  const double floor = 1e-12 * v.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > floor) {
      v *= std::conj(v[i]) / mag;
      v[i] = mag;
      return;
    }
  }
}

}  // namespace

SpectralDecomposition hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::NotSquare, os.str());
  }
  if (!m.allFinite()) throw Error(ErrorKind::NonFinite, "matrix has NaN/Inf entries");
  const double norm = m.norm();
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance * norm) {
    std::ostringstream os;
    os << "||M - M^dagger||_F = " << defect << " exceeds " << kHermitianTolerance << " * ||M||_F = "
       << kHermitianTolerance * norm;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  // Symmetrize so that the solver sees an exactly Hermitian input.
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) fix_phase(out.eigenvectors.col(c));
  return out;
}

Matrix func_of_hermitian(const SpectralDecomposition& spectral, const ScalarFunction& f) {
  const auto n = spectral.eigenvalues.size();
  Vector diag(n);
  for (Eigen::Index i = 0; i < n; ++i) diag[i] = f(spectral.eigenvalues[i]);
  return spectral.eigenvectors * diag.asDiagonal() * spectral.eigenvectors.adjoint();
}

Matrix func_of_hermitian(const Matrix& m, const ScalarFunction& f) {
  return func_of_hermitian(hermitian_eig(m), f);
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
  const double top = solver.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

MatrixNorms matrix_norms(const Matrix& m) { return {m.norm(), spectral_norm(m)}; }

Matrix restrict(const Matrix& m, std::span<const int> indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  Matrix out(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) out(i, j) = m(indices[i], indices[j]);
  return out;
}

double restricted_unitarity_defect(const Matrix& u, std::span<const int> indices) {
  const Matrix uu = u * u.adjoint();
  const Matrix block = restrict(uu, indices);
  return (block - Matrix::Identity(block.rows(), block.cols())).norm();
}

}  // namespace sqcat
