#include "sqcat/observables.hpp"

#include "sqcat/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sqcat {

namespace {

struct Moments {
  Complex a;       // <a>
  Complex a2;      // <a^2>
  double n = 0.0;  // <a^dag a>
};

Moments moments(const FieldState& state) {
  const Vector psi = state.amplitudes / state.amplitudes.norm();
  const auto dim = psi.size();
  Moments m;
  for (Eigen::Index k = 1; k < dim; ++k) {
    const double sk = std::sqrt(static_cast<double>(k));
    m.a += std::conj(psi[k - 1]) * sk * psi[k];
    m.n += static_cast<double>(k) * std::norm(psi[k]);
    if (k >= 2) m.a2 += std::conj(psi[k - 2]) * std::sqrt(static_cast<double>(k * (k - 1))) * psi[k];
  }
  return m;
}

// Displaced-parity evaluator: D(r e^{i phi}) = R(phi) exp(r (a^dag - a)) R(phi)^dag
// with R(phi) = exp(i phi a^dag a), so one decomposition of i(a - a^dag)
// serves the whole grid.
class DisplacedParity {
 public:
  explicit DisplacedParity(const HilbertDims& dims) : spectral_(hermitian_eig(generator(dims))) {}

  double operator()(const Vector& psi, Complex alpha) const {
    const double r = std::abs(alpha);
    const double phi = std::arg(alpha);
    const auto n = psi.size();
    // v = D(alpha)^dag psi = R e^{-i r K} R^dag psi
    Vector v(n);
    for (Eigen::Index k = 0; k < n; ++k) v[k] = std::exp(-kI * (phi * static_cast<double>(k))) * psi[k];
    Vector c = spectral_.eigenvectors.adjoint() * v;
    for (Eigen::Index k = 0; k < n; ++k) c[k] *= std::exp(-kI * (r * spectral_.eigenvalues[k]));
    v = spectral_.eigenvectors * c;
    double w = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) w += (k % 2 == 0 ? 1.0 : -1.0) * std::norm(v[k]);
    return 2.0 / std::numbers::pi * w;
  }

 private:
  // K with exp(i r K) = exp(r (a^dag - a)).
  static Matrix generator(const HilbertDims& dims) {
    const Matrix a = annihilation(dims);
    return -kI * (a.adjoint() - a);
  }

  SpectralDecomposition spectral_;
};

}  // namespace

QuadratureStats quadrature_stats(const FieldState& state) {
  const Moments m = moments(state);
  QuadratureStats s;
  s.mean_x = m.a.real();
  s.mean_p = m.a.imag();
  const double x2 = (2.0 * m.a2.real() + 2.0 * m.n + 1.0) / 4.0;
  const double p2 = (-2.0 * m.a2.real() + 2.0 * m.n + 1.0) / 4.0;
  s.var_x = x2 - s.mean_x * s.mean_x;
  s.var_p = p2 - s.mean_p * s.mean_p;
  s.cov_xp = m.a2.imag() / 2.0 - s.mean_x * s.mean_p;
  // smallest eigenvalue of [[var_x, cov], [cov, var_p]]
  const double mid = 0.5 * (s.var_x + s.var_p);
  const double half_gap = std::hypot(0.5 * (s.var_x - s.var_p), s.cov_xp);
  s.min_var_over_rotations = mid - half_gap;
  return s;
}

std::vector<double> photon_distribution(const FieldState& state) {
  const double total = state.amplitudes.squaredNorm();
  std::vector<double> p(static_cast<std::size_t>(state.amplitudes.size()));
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) p[k] = std::norm(state.amplitudes[k]) / total;
  return p;
}

double mean_photon_number(const FieldState& state) { return moments(state).n; }

void WignerSpec::validate() const {
  if (!(x_min < x_max) || !(p_min < p_max)) {
    std::ostringstream os;
    os << "malformed Wigner range x [" << x_min << ", " << x_max << "], p [" << p_min << ", " << p_max << "]";
    throw Error(ErrorKind::PreconditionViolation, os.str());
  }
  if (resolution < 2) throw Error(ErrorKind::PreconditionViolation, "Wigner resolution must be >= 2");
}

double WignerSpec::x_at(int i) const { return x_min + (x_max - x_min) * i / (resolution - 1); }

double WignerSpec::p_at(int j) const { return p_min + (p_max - p_min) * j / (resolution - 1); }

double WignerSpec::cell_area() const {
  return (x_max - x_min) / (resolution - 1) * (p_max - p_min) / (resolution - 1);
}

double WignerGrid::integral() const { return values.sum() * spec.cell_area(); }

double max_grid_amplitude(const WignerSpec& spec) {
  const double x = std::max(std::abs(spec.x_min), std::abs(spec.x_max));
  const double p = std::max(std::abs(spec.p_min), std::abs(spec.p_max));
  return std::hypot(x, p);
}

bool inside_trust_region(const WignerSpec& spec, const HilbertDims& dims) {
  const double r = max_grid_amplitude(spec);
  return r * r + 3.0 * r < static_cast<double>(dims.interior_levels());
}

WignerGrid wigner(const FieldState& state, const WignerSpec& spec) {
  spec.validate();
  if (!inside_trust_region(spec, state.dims)) {
    std::ostringstream os;
    const double r = max_grid_amplitude(spec);
    os << "grid reaches |alpha| = " << r << "; |alpha|^2 + 3|alpha| = " << r * r + 3.0 * r
       << " is not below N - G = " << state.dims.interior_levels();
    throw Error(ErrorKind::TrustRegionViolation, os.str());
  }
  const DisplacedParity eval(state.dims);
  const Vector psi = state.amplitudes / state.amplitudes.norm();
  WignerGrid grid{spec, Eigen::MatrixXd(spec.resolution, spec.resolution)};
  for (int i = 0; i < spec.resolution; ++i)
    for (int j = 0; j < spec.resolution; ++j) grid.values(i, j) = eval(psi, Complex{spec.x_at(i), spec.p_at(j)});
  return grid;
}

double wigner_at(const FieldState& state, Complex alpha) {
  return DisplacedParity(state.dims)(state.amplitudes / state.amplitudes.norm(), alpha);
}

}  // namespace sqcat
