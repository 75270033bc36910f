#pragma once

// Truncated Fock space, the charge-qubit space and their tensor product.
//
// Joint vectors are ordered qubit-slowest: index = q * n_fock + n, with the
// qubit basis fixed as (|e>, |g>) so that sigma_z |e> = +|e>.

#include "sqcat/numerics.hpp"

#include <vector>

namespace sqcat {

struct HilbertDims {
  int n_fock = 80;
  int guard = 12;

  int joint_dim() const { return 2 * n_fock; }
  /// Number of trusted Fock levels, 0..interior_levels()-1.
  int interior_levels() const { return n_fock - guard; }

  /// Throws InvalidDims unless n_fock >= 8 and 0 <= guard < n_fock.
  void validate() const;
  /// validate() plus guard >= 4, required for displacement and squeezing.
  void validate_for_displacement() const;

  bool operator==(const HilbertDims&) const = default;
};

inline constexpr HilbertDims kDynamicsDims{80, 12};
inline constexpr HilbertDims kIdentityDims{40, 8};

enum class Qubit { e = 0, g = 1 };

/// Population allowed in the guard band of a freshly built coherent state.
inline constexpr double kCoherentLeakageLimit = 1e-10;
/// Default |alpha| bound for displacement().
inline constexpr double kDisplacementBound = 3.0;

struct FieldState {
  HilbertDims dims;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
  FieldState normalized() const;
};

struct JointState {
  HilbertDims dims;
  Vector amplitudes;

  double norm() const { return amplitudes.norm(); }
  /// Unnormalized field component <q|psi>.
  Vector component(Qubit q) const;
};

// Field operators, n_fock x n_fock.
Matrix annihilation(const HilbertDims& dims);
Matrix creation(const HilbertDims& dims);
Matrix number_operator(const HilbertDims& dims);
Matrix parity(const HilbertDims& dims);
Matrix field_identity(const HilbertDims& dims);
/// D(alpha) = exp(alpha a^dagger - alpha^* a). Throws PreconditionViolation
/// when |alpha| exceeds bound.
Matrix displacement(Complex alpha, const HilbertDims& dims, double bound = kDisplacementBound);

// Qubit operators in the (|e>, |g>) basis.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
/// |e><g|
Matrix sigma_plus();
/// |g><e|
Matrix sigma_minus();
Matrix qubit_identity();

/// qubit_op (x) field_op, qubit index slowest.
Matrix compose(const Matrix& qubit_op, const Matrix& field_op);

FieldState fock_state(int n, const HilbertDims& dims);
/// Truncated and renormalized coherent state. Throws TruncationLeakage
/// when the untruncated guard-band population exceeds 1e-10.
FieldState coherent_state(Complex amp, const HilbertDims& dims);
JointState product_state(Qubit q, const FieldState& field);

/// Population in the top `guard` Fock levels.
double leakage(const FieldState& state);
double leakage(const JointState& state);
double leakage(const Vector& field_amplitudes, const HilbertDims& dims);

/// Fock-level indices 0..interior_levels()-1.
std::vector<int> interior_field_indices(const HilbertDims& dims);
/// Joint indices whose Fock level is in the interior, both qubit blocks.
std::vector<int> interior_joint_indices(const HilbertDims& dims);
/// Joint indices with Fock level <= max_level.
std::vector<int> joint_indices_up_to(const HilbertDims& dims, int max_level);

}  // namespace sqcat
