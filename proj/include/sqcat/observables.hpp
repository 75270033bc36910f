#pragma once

// Field diagnostics. Quadratures are X = (a + a^dag)/2, P = (a - a^dag)/(2i),
// so the vacuum has Var X = Var P = 1/4.

#include "sqcat/hilbert.hpp"

#include <vector>

namespace sqcat {

struct QuadratureStats {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double cov_xp = 0.0;  // symmetrized
  double min_var_over_rotations = 0.0;
};

/// Moments use the infinite-dimensional relation a a^dag = a^dag a + 1, so
/// the truncation edge does not enter.
QuadratureStats quadrature_stats(const FieldState& state);

/// p_n = |c_n|^2 of the normalized state.
std::vector<double> photon_distribution(const FieldState& state);

double mean_photon_number(const FieldState& state);

struct WignerSpec {
  double x_min = -3.0;
  double x_max = 3.0;
  double p_min = -3.0;
  double p_max = 3.0;
  int resolution = 61;  // points per axis

  /// Throws PreconditionViolation on inverted ranges or resolution < 2.
  void validate() const;
  double x_at(int i) const;
  double p_at(int j) const;
  double cell_area() const;
};

struct WignerGrid {
  WignerSpec spec;
  /// values(i, j) is W at x_at(i) + i p_at(j).
  Eigen::MatrixXd values;

  double integral() const;
  double min() const { return values.minCoeff(); }
  double max() const { return values.maxCoeff(); }
};

/// Largest |alpha| on the grid boundary.
double max_grid_amplitude(const WignerSpec& spec);
/// |alpha|^2 + 3|alpha| < n_fock - guard at every grid point.
bool inside_trust_region(const WignerSpec& spec, const HilbertDims& dims);

/// W(alpha) = (2/pi) <psi| D(alpha) Pi D(alpha)^dag |psi>. Throws
/// TrustRegionViolation when the grid reaches past the trusted levels.
WignerGrid wigner(const FieldState& state, const WignerSpec& spec);

/// Single-point evaluation with the same displaced-parity construction.
double wigner_at(const FieldState& state, Complex alpha);

}  // namespace sqcat
