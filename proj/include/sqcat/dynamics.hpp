#pragma once

#include "sqcat/hilbert.hpp"

#include <optional>
#include <vector>

namespace sqcat {

struct TimeGrid {
  double t_start = 0.0;
  double t_end = 3.0;
  int n_points = 61;

  /// t_end >= t_start, n_points >= 2; a single point is allowed only when
  /// t_start == t_end.
  void validate() const;
  double step() const;
  double at(int k) const;
  std::vector<double> times() const;
};

/// Leakage above which a trajectory stops reporting states.
inline constexpr double kTrajectoryLeakageLimit = 1e-6;

struct Trajectory {
  std::vector<double> times;
  std::vector<JointState> states;
  std::vector<double> leakages;
  /// Set when a point exceeded the leakage limit; that point and all later
  /// ones are not stored.
  std::optional<double> aborted_at;
  double abort_leakage = 0.0;

  bool aborted() const { return aborted_at.has_value(); }
};

/// exp(-i H t / hbar) for a fixed Hermitian H, decomposed once.
class Propagator {
 public:
  explicit Propagator(const Matrix& hamiltonian);

  Matrix at(double t) const;
  /// U(t) psi without forming U(t).
  Vector apply(const Vector& psi, double t) const;

  const SpectralDecomposition& spectrum() const { return spectral_; }

 private:
  SpectralDecomposition spectral_;
};

Matrix propagator(const Matrix& hamiltonian, double t);

/// Evolves psi0 over the grid. On leakage > leakage_limit the trajectory is
/// truncated and flagged rather than thrown.
Trajectory evolve(const Matrix& hamiltonian, const JointState& psi0, const TimeGrid& grid,
                  double leakage_limit = kTrajectoryLeakageLimit);

/// Field-space counterpart used for single-branch evolutions.
FieldState evolve_field(const Propagator& prop, const FieldState& psi0, double t);

/// <psi|H|psi>
double expectation(const Matrix& h, const Vector& psi);

}  // namespace sqcat
