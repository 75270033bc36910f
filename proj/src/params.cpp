#include "sqcat/params.hpp"

#include "sqcat/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace sqcat {

void PhysParams::validate() const {
  const bool finite = std::isfinite(hbar_omega) && std::isfinite(e_j) && std::isfinite(e_z) &&
                      std::isfinite(beta.real()) && std::isfinite(beta.imag()) && std::isfinite(gamma_flux);
  if (!finite) throw Error(ErrorKind::PreconditionViolation, "physical parameters must be finite");
  if (!(hbar_omega > 0.0)) throw Error(ErrorKind::PreconditionViolation, "hbar_omega must be positive");
}

bool PhysParams::in_jc_regime() const { return hbar_omega * std::abs(beta) >= 4.0 * e_j; }

bool PhysParams::in_squeeze_regime() const { return hbar_omega - e_j >= 4.0 * e_j; }

PhysParams default_params() { return {}; }

PhysParams deep_squeeze_params() {
  PhysParams p;
  p.hbar_omega = 50.0;
  return p;
}

PhysParams preset_params(Preset preset) {
  return preset == Preset::DeepSqueeze ? deep_squeeze_params() : default_params();
}

const char* to_string(Preset preset) noexcept {
  return preset == Preset::DeepSqueeze ? "deep-squeeze" : "default";
}

PhysParams derive_params(const DeviceParams& dev) {
  PhysParams p;
  p.hbar_omega = 4.0 * dev.e_ch;
  p.e_j = dev.e_j;
  p.e_z = -2.0 * dev.e_ch * (1.0 - 2.0 * dev.n_g);
  p.gamma_flux = std::numbers::pi * dev.flux_ratio_classical;
  p.beta = dev.mode_ratio;
  return p;
}

std::vector<std::string> jc_regime_warnings(const PhysParams& p) {
  std::vector<std::string> out;
  if (!p.in_jc_regime()) {
    std::ostringstream os;
    os << "JC regime marginal: hbar_omega*|beta| = " << p.hbar_omega * std::abs(p.beta) << " < 4*E_J = " << 4.0 * p.e_j;
    out.push_back(os.str());
  }
  return out;
}

std::vector<std::string> squeeze_regime_warnings(const PhysParams& p) {
  std::vector<std::string> out;
  if (!p.in_squeeze_regime()) {
    std::ostringstream os;
    os << "RegimeViolation: hbar_omega - E_J = " << p.hbar_omega - p.e_j << " < 4*E_J = " << 4.0 * p.e_j
       << "; the dispersive term is not negligible";
    out.push_back(os.str());
  }
  return out;
}

}  // namespace sqcat
