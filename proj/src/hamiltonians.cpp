#include "sqcat/hamiltonians.hpp"

#include "sqcat/error.hpp"

#include <cmath>
#include <sstream>

namespace sqcat {

namespace {

constexpr double kRealTolerance = 1e-12;

void require_real_beta(const PhysParams& p) {
  if (std::abs(p.beta.imag()) > kRealTolerance) {
    std::ostringstream os;
    os << "beta = " << p.beta << " must be real here";
    throw Error(ErrorKind::NonRealBeta, os.str());
  }
}

void require_squeeze_preconditions(const PhysParams& p) {
  p.validate();
  require_real_beta(p);
  if (std::abs(p.e_z) > kRealTolerance) {
    throw Error(ErrorKind::PreconditionViolation, "E_z must be 0 (n_g = 1/2) for the squeezing chain");
  }
  const double w2 = p.hbar_omega * p.hbar_omega;
  if (std::abs(p.e_j * p.e_j - w2) < 1e-6 * w2) {
    std::ostringstream os;
    os << "E_J = " << p.e_j << " is resonant with hbar_omega = " << p.hbar_omega;
    throw Error(ErrorKind::ResonanceSingularity, os.str());
  }
}

// beta a + beta^* a^dagger
Matrix field_quadrature(const PhysParams& p, const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return p.beta * a + std::conj(p.beta) * a.adjoint();
}

// Field part of the sigma_x drive: i(hbar omega/2)(beta a - beta^* a^dag) - E_z.
Matrix drive_field_operator(const PhysParams& p, const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return kI * (0.5 * p.hbar_omega) * (p.beta * a - std::conj(p.beta) * a.adjoint()) - p.e_z * field_identity(dims);
}

Matrix free_part(const PhysParams& p, const HilbertDims& dims, const Matrix& qubit_term) {
  return compose(qubit_identity(), p.hbar_omega * number_operator(dims)) +
         compose(qubit_term, field_identity(dims));
}

Matrix two_photon(const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return a * a + a.adjoint() * a.adjoint();
}

}  // namespace

Matrix build_H_full(const PhysParams& p, const HilbertDims& dims) {
  p.validate();
  dims.validate();
  const Matrix arg = p.gamma_flux * field_identity(dims) + field_quadrature(p, dims);
  const Matrix cosine = func_of_hermitian(arg, ScalarFunction::cos());
  return free_part(p, dims, p.e_z * sigma_z()) - p.e_j * compose(sigma_x(), cosine);
}

double h_t_constant(const PhysParams& p) { return 0.25 * p.hbar_omega * std::norm(p.beta); }

Matrix jc_dropped_terms(const PhysParams& p, const HilbertDims& dims) {
  p.validate();
  dims.validate();
  const Matrix arg = 2.0 * field_quadrature(p, dims) + 2.0 * p.gamma_flux * field_identity(dims);
  const SpectralDecomposition spec = hermitian_eig(arg);
  const Matrix cosine = func_of_hermitian(spec, ScalarFunction::cos());
  const Matrix sine = func_of_hermitian(spec, ScalarFunction::sin());
  const double half = 0.5 * p.e_j;
  return half * compose(sigma_z(), cosine) - kI * half * compose(sigma_plus() - sigma_minus(), sine);
}

Matrix jc_drive_term(const PhysParams& p, const HilbertDims& dims) {
  return compose(sigma_x(), drive_field_operator(p, dims));
}

Matrix build_H_JC(const PhysParams& p, const HilbertDims& dims) {
  p.validate();
  dims.validate();
  return free_part(p, dims, 0.5 * p.e_j * sigma_z()) + jc_drive_term(p, dims);
}

Matrix build_H_T(const PhysParams& p, const HilbertDims& dims) {
  const Matrix jc = build_H_JC(p, dims);
  Matrix h = jc + jc_dropped_terms(p, dims);
  h.diagonal().array() += h_t_constant(p);
  return h;
}

double squeeze_coefficient(const PhysParams& p) {
  const double w = p.hbar_omega;
  const double b2 = std::norm(p.beta);
  return -(p.e_j - w) * b2 * w * w / (4.0 * (p.e_j * p.e_j - w * w));
}

double dispersive_coefficient(const PhysParams& p) {
  const double w = p.hbar_omega;
  const double b2 = std::norm(p.beta);
  return p.e_j * b2 * w * w / (p.e_j * p.e_j - w * w);
}

Matrix dispersive_operator(const HilbertDims& dims) {
  return compose(sigma_z(), number_operator(dims) + 0.5 * field_identity(dims));
}

Matrix build_H_squeeze(const PhysParams& p, const HilbertDims& dims) {
  require_squeeze_preconditions(p);
  dims.validate();
  return free_part(p, dims, 0.5 * p.e_j * sigma_z()) + squeeze_coefficient(p) * compose(sigma_z(), two_photon(dims));
}

Matrix build_H_eff(const PhysParams& p, const HilbertDims& dims) {
  return build_H_squeeze(p, dims) + dispersive_coefficient(p) * dispersive_operator(dims);
}

Matrix build_H_SS(const PhysParams& p, const HilbertDims& dims) {
  require_squeeze_preconditions(p);
  dims.validate();
  return free_part(p, dims, 0.5 * p.e_j * sigma_x()) + squeeze_coefficient(p) * compose(sigma_x(), two_photon(dims));
}

Matrix h_ss_field_block(const PhysParams& p, const HilbertDims& dims, int branch, double omega_scale) {
  require_squeeze_preconditions(p);
  dims.validate();
  const double s = branch >= 0 ? 1.0 : -1.0;
  return omega_scale * p.hbar_omega * number_operator(dims) + (s * 0.5 * p.e_j) * field_identity(dims) +
         (s * squeeze_coefficient(p)) * two_photon(dims);
}

double xi_squared(const PhysParams& p) {
  require_real_beta(p);
  const double w = p.hbar_omega;
  const double b = p.beta.real();
  return b * b * w * w / (4.0 * (p.e_j + w));
}

double squeeze_rate(const PhysParams& p) { return xi_squared(p); }

double squeeze_magnitude(const PhysParams& p, double t) { return 2.0 * squeeze_rate(p) * t; }

}  // namespace sqcat
