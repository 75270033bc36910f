#pragma once

#include <stdexcept>
#include <string>

namespace sqcat {

/// Failure categories reported by the library. The CLI maps these onto
/// check failures or exit codes.
enum class ErrorKind {
  DimensionMismatch,
  NotSquare,
  NotHermitian,
  NonFinite,
  InvalidDims,
  TruncationLeakage,
  ResonanceSingularity,
  EpsilonTooLarge,
  NonRealBeta,
  PreconditionViolation,
  LeakageAbort,
  ZeroProbabilityCollapse,
  TrustRegionViolation,
  ConfigError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sqcat
