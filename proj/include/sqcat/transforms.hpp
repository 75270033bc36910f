#pragma once

// Unitary frame changes: the linearizing transformation T, the two small
// rotations U1/U2 and the qubit rotation U_R.

#include "sqcat/hilbert.hpp"
#include "sqcat/params.hpp"

namespace sqcat {

/// D(alpha) e^{i gamma/2} with alpha = i beta^* / 2.
Matrix phased_displacement(const PhysParams& p, const HilbertDims& dims);

/// T = (1/sqrt2){ -1/2[D^dag - D] I - 1/2[D^dag + D] sigma_z + D sigma_+ + D^dag sigma_- }
/// with D the phased displacement. Accepts complex beta.
Matrix build_T(const PhysParams& p, const HilbertDims& dims);

/// Which generator each small-rotation parameter multiplies.
///
/// AsPrinted: u1 = exp[eps1 (a^dag sigma_+ + sigma_- a)], u2 = exp[eps2 (a sigma_+ + sigma_- a^dag)].
/// DriveCancelling: the two eps values are exchanged between the generators,
/// which is the assignment that makes eps[A, H0] cancel the sigma_x drive.
enum class RotationPairing { AsPrinted, DriveCancelling };

inline constexpr double kMaxRotationEpsilon = 0.2;

struct SmallRotations {
  Complex eps1;
  Complex eps2;
  Matrix u1;
  Matrix u2;
  Matrix generator1;  // a^dag sigma_+ + sigma_- a
  Matrix generator2;  // a sigma_+ + sigma_- a^dag
  RotationPairing pairing = RotationPairing::AsPrinted;

  /// Combined U2 U1.
  Matrix combined() const { return u2 * u1; }
  /// Parameter multiplying generator1 / generator2 under the chosen pairing.
  Complex eps_on_generator1() const { return pairing == RotationPairing::AsPrinted ? eps1 : eps2; }
  Complex eps_on_generator2() const { return pairing == RotationPairing::AsPrinted ? eps2 : eps1; }
};

/// eps1 = i hbar omega beta / (2 (E_J - hbar omega))
Complex rotation_eps1(const PhysParams& p);
/// eps2 = -i hbar omega beta / (2 (E_J + hbar omega))
Complex rotation_eps2(const PhysParams& p);

/// a^dag sigma_+ + sigma_- a
Matrix rotation_generator1(const HilbertDims& dims);
/// a sigma_+ + sigma_- a^dag
Matrix rotation_generator2(const HilbertDims& dims);

/// exp(eps * A) for Hermitian A and purely imaginary eps.
Matrix exp_imaginary_times(const Matrix& hermitian_generator, Complex eps);

/// Requires real beta; throws ResonanceSingularity when |E_J - hbar omega| <
/// 1e-6 hbar omega and EpsilonTooLarge when |eps1| or |eps2| >= 0.2.
SmallRotations build_small_rotations(const PhysParams& p, const HilbertDims& dims,
                                     RotationPairing pairing = RotationPairing::AsPrinted);

/// exp(-i pi sigma_y / 4) (x) I
Matrix build_UR(const HilbertDims& dims);
/// The 2x2 qubit factor of build_UR.
Matrix ur_qubit();

}  // namespace sqcat
