#include "sqcat/analytics.hpp"

#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"

#include <cmath>
#include <sstream>

namespace sqcat {

namespace {

Matrix branch_generator(double omega, double theta, const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return omega * number_operator(dims) + theta * (a * a + a.adjoint() * a.adjoint());
}

double mode_omega(const PhysParams& p, AnalyticMode mode) {
  return mode == AnalyticMode::Physical ? p.hbar_omega : 0.0;
}

void check_branch_leakage(const Vector& v, const HilbertDims& dims, const char* which, double t) {
  const double leak = leakage(v, dims);
  if (leak > kAnalyticLeakageLimit) {
    std::ostringstream os;
    os << "branch " << which << " leaks " << leak << " into the guard band at t = " << t;
    throw Error(ErrorKind::TruncationLeakage, os.str());
  }
}

}  // namespace

FieldState squeezed_coherent(Complex amp, double omega, double theta, double t, const HilbertDims& dims) {
  dims.validate_for_displacement();
  const FieldState start = coherent_state(amp, dims);
  const Propagator prop(branch_generator(omega, theta, dims));
  return evolve_field(prop, start, t);
}

SqueezedCatOracle::SqueezedCatOracle(Complex gamma_amp, const PhysParams& params, const HilbertDims& dims,
                                     AnalyticMode mode)
    : params_(params),
      dims_(dims),
      initial_(coherent_state(gamma_amp, dims)),
      branch_plus_(branch_generator(mode_omega(params, mode), -xi_squared(params), dims)),
      branch_minus_(branch_generator(mode_omega(params, mode), xi_squared(params), dims)) {
  dims.validate_for_displacement();
}

SqueezeComponents SqueezedCatOracle::components(double t) const {
  SqueezeComponents c;
  c.t = t;
  c.params = params_;
  c.dims = dims_;
  c.branch_plus = branch_plus_.apply(initial_.amplitudes, t);
  c.branch_minus = branch_minus_.apply(initial_.amplitudes, t);
  check_branch_leakage(c.branch_plus, dims_, "+", t);
  check_branch_leakage(c.branch_minus, dims_, "-", t);
  const Complex early = std::exp(-kI * (0.5 * params_.e_j * t));
  const Complex late = std::exp(kI * (0.5 * params_.e_j * t));
  const double s = 1.0 / std::sqrt(2.0);
  c.phi_plus = s * (early * c.branch_plus + late * c.branch_minus);
  c.phi_minus = s * (early * c.branch_plus - late * c.branch_minus);
  c.norm_plus = c.phi_plus.norm();
  c.norm_minus = c.phi_minus.norm();
  return c;
}

JointState SqueezedCatOracle::psi_TR(double t) const {
  const SqueezeComponents c = components(t);
  const int n = dims_.n_fock;
  Vector v(2 * n);
  const double s = 1.0 / std::sqrt(2.0);
  v.segment(static_cast<int>(Qubit::e) * n, n) = s * c.phi_minus;
  v.segment(static_cast<int>(Qubit::g) * n, n) = s * c.phi_plus;
  return {dims_, v};
}

SqueezeComponents analytic_components(Complex gamma_amp, double t, const PhysParams& params, const HilbertDims& dims,
                                      AnalyticMode mode) {
  return SqueezedCatOracle(gamma_amp, params, dims, mode).components(t);
}

JointState analytic_psi_TR(Complex gamma_amp, double t, const PhysParams& params, const HilbertDims& dims,
                           AnalyticMode mode) {
  return SqueezedCatOracle(gamma_amp, params, dims, mode).psi_TR(t);
}

double fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    std::ostringstream os;
    os << "fidelity between states of dimension " << a.size() << " and " << b.size();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

double fidelity(const FieldState& a, const FieldState& b) { return fidelity(a.amplitudes, b.amplitudes); }

double fidelity(const JointState& a, const JointState& b) { return fidelity(a.amplitudes, b.amplitudes); }

double outcome_probability(const JointState& psi, Qubit outcome) {
  return psi.component(outcome).squaredNorm() / psi.amplitudes.squaredNorm();
}

QubitMeasurement measure_qubit(const JointState& psi, Qubit outcome) {
  const double p = outcome_probability(psi, outcome);
  if (p < kMinCollapseProbability) {
    std::ostringstream os;
    os << "outcome " << (outcome == Qubit::e ? "e" : "g") << " has probability " << p;
    throw Error(ErrorKind::ZeroProbabilityCollapse, os.str());
  }
  const Vector field = psi.component(outcome);
  return {p, FieldState{psi.dims, field / field.norm()}};
}

}  // namespace sqcat
