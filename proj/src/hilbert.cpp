#include "sqcat/hilbert.hpp"

#include "sqcat/error.hpp"

#include <cmath>
#include <sstream>

namespace sqcat {

void HilbertDims::validate() const {
  if (n_fock < 8) {
    throw Error(ErrorKind::InvalidDims, "n_fock = " + std::to_string(n_fock) + " is below the minimum 8");
  }
  if (guard < 0 || guard >= n_fock) {
    throw Error(ErrorKind::InvalidDims,
                "guard = " + std::to_string(guard) + " must satisfy 0 <= guard < n_fock");
  }
}

void HilbertDims::validate_for_displacement() const {
  validate();
  if (guard < 4) {
    throw Error(ErrorKind::InvalidDims,
                "guard = " + std::to_string(guard) + " must be >= 4 for displacement/squeezing");
  }
}

FieldState FieldState::normalized() const { return {dims, amplitudes / amplitudes.norm()}; }

Vector JointState::component(Qubit q) const {
  return amplitudes.segment(static_cast<int>(q) * dims.n_fock, dims.n_fock);
}

Matrix annihilation(const HilbertDims& dims) {
  const int n = dims.n_fock;
  Matrix a = Matrix::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Matrix creation(const HilbertDims& dims) { return annihilation(dims).adjoint(); }

Matrix number_operator(const HilbertDims& dims) {
  const int n = dims.n_fock;
  Matrix num = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) num(k, k) = static_cast<double>(k);
  return num;
}

Matrix parity(const HilbertDims& dims) {
  const int n = dims.n_fock;
  Matrix p = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
  return p;
}

Matrix field_identity(const HilbertDims& dims) { return Matrix::Identity(dims.n_fock, dims.n_fock); }

Matrix displacement(Complex alpha, const HilbertDims& dims, double bound) {
  if (std::abs(alpha) > bound) {
    std::ostringstream os;
    os << "|alpha| = " << std::abs(alpha) << " exceeds displacement bound " << bound;
    throw Error(ErrorKind::PreconditionViolation, os.str());
  }
  if (alpha == Complex{0.0, 0.0}) return field_identity(dims);
  // alpha a^dagger - alpha^* a = i K with K = -i(alpha a^dagger - alpha^* a) Hermitian.
  const Matrix a = annihilation(dims);
  const Matrix k = -kI * (alpha * a.adjoint() - std::conj(alpha) * a);
  return func_of_hermitian(k, ScalarFunction::exp_i_scale(1.0));
}

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Matrix qubit_identity() { return Matrix::Identity(2, 2); }

Matrix compose(const Matrix& qubit_op, const Matrix& field_op) {
  if (qubit_op.rows() != 2 || qubit_op.cols() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "qubit operator must be 2x2");
  }
  if (field_op.rows() != field_op.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "field operator must be square");
  }
  const auto n = field_op.rows();
  Matrix out = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (qubit_op(i, j) != Complex{0.0, 0.0}) out.block(i * n, j * n, n, n) = qubit_op(i, j) * field_op;
  return out;
}

FieldState fock_state(int n, const HilbertDims& dims) {
  if (n < 0 || n >= dims.n_fock) {
    throw Error(ErrorKind::PreconditionViolation, "Fock level " + std::to_string(n) + " out of range");
  }
  Vector v = Vector::Zero(dims.n_fock);
  v[n] = 1.0;
  return {dims, v};
}

FieldState coherent_state(Complex amp, const HilbertDims& dims) {
  dims.validate();
  // c_n = e^{-|amp|^2/2} amp^n / sqrt(n!), built by recurrence.
  Vector c(dims.n_fock);
  c[0] = std::exp(-0.5 * std::norm(amp));
  for (int k = 1; k < dims.n_fock; ++k) c[k] = c[k - 1] * amp / std::sqrt(static_cast<double>(k));
  // The guard band plus everything truncated away: 1 - sum over trusted levels.
  const double trusted = c.head(dims.interior_levels()).squaredNorm();
  const double tail = std::max(1.0 - trusted, c.tail(dims.guard).squaredNorm());
  if (tail > kCoherentLeakageLimit) {
    std::ostringstream os;
    os << "coherent amplitude " << amp << " leaks " << tail << " into the guard band of N = " << dims.n_fock
       << ", G = " << dims.guard;
    throw Error(ErrorKind::TruncationLeakage, os.str());
  }
  c /= c.norm();
  return {dims, c};
}

JointState product_state(Qubit q, const FieldState& field) {
  const int n = field.dims.n_fock;
  Vector v = Vector::Zero(2 * n);
  v.segment(static_cast<int>(q) * n, n) = field.amplitudes;
  return {field.dims, v};
}

double leakage(const Vector& field_amplitudes, const HilbertDims& dims) {
  return field_amplitudes.tail(dims.guard).squaredNorm();
}

double leakage(const FieldState& state) { return leakage(state.amplitudes, state.dims); }

double leakage(const JointState& state) {
  return leakage(state.component(Qubit::e), state.dims) + leakage(state.component(Qubit::g), state.dims);
}

std::vector<int> interior_field_indices(const HilbertDims& dims) {
  std::vector<int> idx;
  for (int k = 0; k < dims.interior_levels(); ++k) idx.push_back(k);
  return idx;
}

std::vector<int> joint_indices_up_to(const HilbertDims& dims, int max_level) {
  std::vector<int> idx;
  for (int q = 0; q < 2; ++q)
    for (int k = 0; k <= max_level && k < dims.n_fock; ++k) idx.push_back(q * dims.n_fock + k);
  return idx;
}

std::vector<int> interior_joint_indices(const HilbertDims& dims) {
  return joint_indices_up_to(dims, dims.interior_levels() - 1);
}

}  // namespace sqcat
