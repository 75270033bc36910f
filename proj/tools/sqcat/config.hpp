#pragma once

// Scenario configuration: one JSON document, strict schema, every field
// defaulted. See docs/config.md.

#include "sqcat/dynamics.hpp"
#include "sqcat/hilbert.hpp"
#include "sqcat/observables.hpp"
#include "sqcat/params.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqcat::cli {

inline constexpr const char* kVersion = "1.0.0";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WignerConfig {
  std::optional<double> t;         // explicit time
  std::optional<double> squeeze_r; // or time at which r(t) equals this
  Qubit outcome = Qubit::g;
  WignerSpec spec;
};

struct SweepConfig {
  std::string parameter = "beta";
  std::vector<double> values{0.05, 0.1, 0.25, 0.4, 0.5};
  double r_target = 0.5;
};

struct ScenarioConfig {
  Preset preset = Preset::Default;
  PhysParams params = default_params();
  Complex gamma_amp{1.0, 0.0};
  HilbertDims dims = kDynamicsDims;
  TimeGrid grid{0.0, 3.0, 61};
  std::set<std::string> outputs{"timeseries"};
  WignerConfig wigner;
  SweepConfig sweep;

  /// Resolved configuration as canonical JSON (sorted keys, all defaults).
  nlohmann::json to_json() const;
  /// FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
  std::string hash() const;
  /// Wigner time resolved from t or squeeze_r.
  double wigner_time() const;
};

/// Parses and validates. Throws ConfigError with a line number when the
/// offending key can be located in `text`.
ScenarioConfig parse_config(const std::string& text, std::optional<Preset> preset_override = std::nullopt);
ScenarioConfig load_config(const std::string& path, std::optional<Preset> preset_override = std::nullopt);
ScenarioConfig default_config(Preset preset = Preset::Default);

/// Throws ConfigError on any cross-field inconsistency.
void validate(const ScenarioConfig& config);

Preset parse_preset(const std::string& name);

/// FNV-1a 64-bit, hex encoded.
std::string fnv1a_hex(const std::string& bytes);
std::string params_hash(const PhysParams& p);

}  // namespace sqcat::cli
