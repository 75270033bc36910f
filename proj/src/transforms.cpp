#include "sqcat/transforms.hpp"

#include "sqcat/error.hpp"

#include <cmath>
#include <sstream>

namespace sqcat {

Matrix phased_displacement(const PhysParams& p, const HilbertDims& dims) {
  const Complex alpha = 0.5 * kI * std::conj(p.beta);
  return displacement(alpha, dims) * std::exp(kI * (0.5 * p.gamma_flux));
}

Matrix build_T(const PhysParams& p, const HilbertDims& dims) {
  p.validate();
  dims.validate();
  const Matrix d = phased_displacement(p, dims);
  const Matrix dd = d.adjoint();
  const Matrix t = -0.5 * compose(qubit_identity(), dd - d) - 0.5 * compose(sigma_z(), dd + d) +
                   compose(sigma_plus(), d) + compose(sigma_minus(), dd);
  return t / std::sqrt(2.0);
}

Complex rotation_eps1(const PhysParams& p) {
  return kI * p.hbar_omega * p.beta / (2.0 * (p.e_j - p.hbar_omega));
}

Complex rotation_eps2(const PhysParams& p) {
  return -kI * p.hbar_omega * p.beta / (2.0 * (p.e_j + p.hbar_omega));
}

Matrix rotation_generator1(const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return compose(sigma_plus(), a.adjoint()) + compose(sigma_minus(), a);
}

Matrix rotation_generator2(const HilbertDims& dims) {
  const Matrix a = annihilation(dims);
  return compose(sigma_plus(), a) + compose(sigma_minus(), a.adjoint());
}

Matrix exp_imaginary_times(const Matrix& hermitian_generator, Complex eps) {
  if (std::abs(eps.real()) > 1e-12 * std::max(1.0, std::abs(eps))) {
    std::ostringstream os;
    os << "rotation parameter " << eps << " is not purely imaginary";
    throw Error(ErrorKind::PreconditionViolation, os.str());
  }
  if (eps == Complex{0.0, 0.0}) return Matrix::Identity(hermitian_generator.rows(), hermitian_generator.cols());
  return func_of_hermitian(hermitian_generator, ScalarFunction::exp_i_scale(eps.imag()));
}

SmallRotations build_small_rotations(const PhysParams& p, const HilbertDims& dims, RotationPairing pairing) {
  p.validate();
  dims.validate();
  if (std::abs(p.beta.imag()) > 1e-12) {
    std::ostringstream os;
    os << "small rotations require real beta, got " << p.beta;
    throw Error(ErrorKind::NonRealBeta, os.str());
  }
  if (std::abs(p.e_j - p.hbar_omega) < 1e-6 * p.hbar_omega) {
    std::ostringstream os;
    os << "E_J = " << p.e_j << " is resonant with hbar_omega = " << p.hbar_omega << "; eps1 diverges";
    throw Error(ErrorKind::ResonanceSingularity, os.str());
  }
  SmallRotations r;
  r.pairing = pairing;
  r.eps1 = rotation_eps1(p);
  r.eps2 = rotation_eps2(p);
  if (std::abs(r.eps1) >= kMaxRotationEpsilon || std::abs(r.eps2) >= kMaxRotationEpsilon) {
    std::ostringstream os;
    os << "|eps1| = " << std::abs(r.eps1) << ", |eps2| = " << std::abs(r.eps2) << " must both be < "
       << kMaxRotationEpsilon;
    throw Error(ErrorKind::EpsilonTooLarge, os.str());
  }
  r.generator1 = rotation_generator1(dims);
  r.generator2 = rotation_generator2(dims);
  r.u1 = exp_imaginary_times(r.generator1, r.eps_on_generator1());
  r.u2 = exp_imaginary_times(r.generator2, r.eps_on_generator2());
  return r;
}

Matrix ur_qubit() {
  // (sqrt2/2)[1 - (sigma_+ - sigma_-)]
  return (std::sqrt(2.0) / 2.0) * (qubit_identity() - (sigma_plus() - sigma_minus()));
}

Matrix build_UR(const HilbertDims& dims) { return compose(ur_qubit(), field_identity(dims)); }

}  // namespace sqcat
