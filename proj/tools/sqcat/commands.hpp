#pragma once

#include "config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sqcat::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitConfigError = 2 };

struct CommandOptions {
  std::optional<std::string> config_path;
  std::string out_dir = ".";
  std::optional<Preset> preset;
  std::optional<double> time;      // wigner only
  std::optional<Qubit> outcome;    // wigner only
};

/// One row of the verification report. Every check is phrased as
/// residual <= tolerance; fidelities enter as 1 - F.
struct Check {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string message;
};

struct VerifyReport {
  std::string config_hash;
  std::vector<std::string> suites;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the identity suite for one configuration.
std::vector<Check> verify_suite(const ScenarioConfig& config, const std::string& suite);

/// Formats a double with 17 significant digits, independent of locale.
std::string format_double(double v);
/// Shortest round-trip form, for human-readable tables.
std::string format_short(double v);

/// Each returns an ExitCode. Config problems propagate as ConfigError.
int run_verify(const CommandOptions& opts, std::ostream& out);
int run_evolve(const CommandOptions& opts, std::ostream& out);
int run_wigner(const CommandOptions& opts, std::ostream& out);
int run_sweep(const CommandOptions& opts, std::ostream& out);

/// Dispatches by subcommand name and maps ConfigError to kExitConfigError.
int run_command(const std::string& name, const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace sqcat::cli
