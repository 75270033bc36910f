#pragma once

// Hamiltonians along the derivation chain, from the full nonlinear SQUID
// coupling down to the qubit-conditioned squeezing Hamiltonian, all as
// explicit joint-space matrices (qubit slowest, basis (|e>, |g>)).

#include "sqcat/hilbert.hpp"
#include "sqcat/params.hpp"

namespace sqcat {

/// hbar*omega a^dag a + E_z sigma_z - E_J sigma_x cos(gamma + beta a + beta^* a^dag)
Matrix build_H_full(const PhysParams& p, const HilbertDims& dims);

/// T H_full T^dagger in closed form, including the constant offset
/// h_t_constant(p) on the diagonal.
Matrix build_H_T(const PhysParams& p, const HilbertDims& dims);

/// The scalar offset carried by build_H_T: hbar*omega*|beta|^2/4.
double h_t_constant(const PhysParams& p);

/// Jaynes-Cummings-type reduction of H_T: the cos/sin terms are dropped.
Matrix build_H_JC(const PhysParams& p, const HilbertDims& dims);

/// H_T - H_JC - h_t_constant: the terms the JC reduction discards.
Matrix jc_dropped_terms(const PhysParams& p, const HilbertDims& dims);

/// The sigma_x drive term of H_JC.
Matrix jc_drive_term(const PhysParams& p, const HilbertDims& dims);

/// Coefficient of (a^2 + a^dag^2) sigma_z in H_eff; equals -xi_squared.
double squeeze_coefficient(const PhysParams& p);
/// Coefficient of (a^dag a + 1/2) sigma_z in H_eff.
double dispersive_coefficient(const PhysParams& p);

/// Effective Hamiltonian after the two small rotations. Requires E_z = 0 and
/// real beta; throws ResonanceSingularity near E_J = hbar*omega.
Matrix build_H_eff(const PhysParams& p, const HilbertDims& dims);

/// H_eff without its dispersive term. Regime violations are reported by
/// squeeze_regime_warnings(), not thrown.
Matrix build_H_squeeze(const PhysParams& p, const HilbertDims& dims);

/// (a^dag a + 1/2) sigma_z
Matrix dispersive_operator(const HilbertDims& dims);

/// hbar*omega a^dag a + (E_J/2) sigma_x - xi^2 (a^2 + a^dag^2) sigma_x
Matrix build_H_SS(const PhysParams& p, const HilbertDims& dims);

/// Field block of H_SS for the sigma_x eigenvalue `branch` (+1 or -1):
/// omega_scale*hbar*omega a^dag a + branch*E_J/2 - branch*xi^2 (a^2 + a^dag^2).
/// omega_scale = 0 gives the omega-stripped generator used for squeezing-law tests.
Matrix h_ss_field_block(const PhysParams& p, const HilbertDims& dims, int branch, double omega_scale = 1.0);

/// beta^2 (hbar omega)^2 / (4 (E_J + hbar omega)). Requires real beta.
double xi_squared(const PhysParams& p);
/// xi^2 / hbar, the rate multiplying t in the squeeze parameter.
double squeeze_rate(const PhysParams& p);
/// Squeeze magnitude r(t) = 2 xi^2 t / hbar.
double squeeze_magnitude(const PhysParams& p, double t);

}  // namespace sqcat
