#pragma once

// Closed-form qubit-conditioned squeezed-cat state and the charge
// measurement that projects it onto one field component.
//
// H_SS is block diagonal in the sigma_x eigenbasis. Starting from
// |gamma> (x) |g> with |g> = (|+> - |->)/sqrt2, each branch evolves under
//   s=+1: omega a^dag a + E_J/2 - xi^2 (a^2 + a^dag^2)
//   s=-1: omega a^dag a - E_J/2 + xi^2 (a^2 + a^dag^2)
// and
//   Phi_pm = (1/sqrt2)[e^{-iE_J t/2} S_+|gamma> pm e^{+iE_J t/2} S_-|gamma>],
//   Psi    = (1/sqrt2)[Phi_- |e> + Phi_+ |g>],
// where S_s = exp(-i t (omega a^dag a - s xi^2 (a^2 + a^dag^2))).

#include "sqcat/dynamics.hpp"
#include "sqcat/hilbert.hpp"
#include "sqcat/params.hpp"

namespace sqcat {

/// Population allowed in the guard band of an analytic branch state.
inline constexpr double kAnalyticLeakageLimit = 1e-8;
/// Probability below which a measurement outcome is treated as impossible.
inline constexpr double kMinCollapseProbability = 1e-14;

/// Physical keeps the omega a^dag a rotation; OmegaStripped drops it so the
/// squeezing law can be checked without rotating-frame bookkeeping.
enum class AnalyticMode { Physical, OmegaStripped };

struct SqueezeComponents {
  Vector phi_plus;   // unnormalized
  Vector phi_minus;  // unnormalized
  Vector branch_plus;   // S_+ |gamma>, normalized
  Vector branch_minus;  // S_- |gamma>, normalized
  double norm_plus = 0.0;
  double norm_minus = 0.0;
  double t = 0.0;
  PhysParams params;
  HilbertDims dims;

  FieldState branch_plus_state() const { return {dims, branch_plus}; }
  FieldState branch_minus_state() const { return {dims, branch_minus}; }
};

/// exp(-i t (omega a^dag a + theta (a^2 + a^dag^2))) |amp>
FieldState squeezed_coherent(Complex amp, double omega, double theta, double t, const HilbertDims& dims);

/// Caches the coherent start state and both branch propagators so a time
/// series costs one decomposition per branch.
class SqueezedCatOracle {
 public:
  SqueezedCatOracle(Complex gamma_amp, const PhysParams& params, const HilbertDims& dims,
                    AnalyticMode mode = AnalyticMode::Physical);

  /// Throws TruncationLeakage if either branch leaks more than 1e-8.
  SqueezeComponents components(double t) const;
  JointState psi_TR(double t) const;

  const FieldState& initial_field() const { return initial_; }

 private:
  PhysParams params_;
  HilbertDims dims_;
  FieldState initial_;
  Propagator branch_plus_;
  Propagator branch_minus_;
};

SqueezeComponents analytic_components(Complex gamma_amp, double t, const PhysParams& params, const HilbertDims& dims,
                                      AnalyticMode mode = AnalyticMode::Physical);
JointState analytic_psi_TR(Complex gamma_amp, double t, const PhysParams& params, const HilbertDims& dims,
                           AnalyticMode mode = AnalyticMode::Physical);

/// |<a|b>|^2 / (||a||^2 ||b||^2). Throws DimensionMismatch.
double fidelity(const Vector& a, const Vector& b);
double fidelity(const FieldState& a, const FieldState& b);
double fidelity(const JointState& a, const JointState& b);

struct QubitMeasurement {
  double probability = 0.0;
  FieldState collapsed;
};

/// Projects onto |outcome> and renormalizes the field. Throws
/// ZeroProbabilityCollapse when the outcome probability is below 1e-14.
QubitMeasurement measure_qubit(const JointState& psi, Qubit outcome);
/// ||<outcome|psi>||^2 / ||psi||^2 without collapsing.
double outcome_probability(const JointState& psi, Qubit outcome);

}  // namespace sqcat
