#pragma once

// Model parameters. Units throughout: hbar = 1, energies in units of E_J,
// times in units of hbar/E_J.

#include "sqcat/numerics.hpp"

#include <string>
#include <vector>

namespace sqcat {

/// Device-level description of the SQUID charge box in the cavity.
struct DeviceParams {
  double e_ch = 2.5;                  // single-electron charging energy
  double e_j = 1.0;                   // Josephson coupling
  double n_g = 0.5;                   // dimensionless gate charge
  double flux_ratio_classical = 0.0;  // Phi_c / Phi_0
  Complex mode_ratio{0.25, 0.0};      // pi * eta / Phi_0, already scaled

  /// E_ch >= 5 E_J.
  bool in_charge_regime() const { return e_ch >= 5.0 * e_j; }
};

/// Parameters of the cavity + two-level Hamiltonian.
struct PhysParams {
  double hbar_omega = 10.0;
  double e_j = 1.0;
  double e_z = 0.0;
  Complex beta{0.25, 0.0};
  double gamma_flux = 0.0;

  /// Throws PreconditionViolation if hbar_omega <= 0 or any value is non-finite.
  void validate() const;
  /// hbar*omega*|beta| >= 4 E_J.
  bool in_jc_regime() const;
  /// hbar*omega - E_J >= 4 E_J.
  bool in_squeeze_regime() const;
};

PhysParams default_params();
/// hbar*omega = 50; deep in the regime where the dispersive term is negligible.
PhysParams deep_squeeze_params();

enum class Preset { Default, DeepSqueeze };
PhysParams preset_params(Preset preset);
const char* to_string(Preset preset) noexcept;

PhysParams derive_params(const DeviceParams& dev);

/// Human-readable notes for every regime inequality that is not met.
std::vector<std::string> jc_regime_warnings(const PhysParams& p);
std::vector<std::string> squeeze_regime_warnings(const PhysParams& p);

}  // namespace sqcat
