#include "doctest.h"
#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"
#include "sqcat/transforms.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace sqcat;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an sqcat::Error");
  return ErrorKind::ConfigError;
}

}  // namespace

TEST_CASE("T at beta = 0 is the Hadamard-like qubit rotation") {
  const HilbertDims dims{10, 4};
  PhysParams p;
  p.beta = 0.0;
  const Matrix t = build_T(p, dims);
  const Matrix expected = compose((sigma_x() - sigma_z()) / std::sqrt(2.0), field_identity(dims));
  CHECK((t - expected).norm() < 1e-14);

  const Matrix sz = compose(sigma_z(), field_identity(dims));
  const Matrix sx = compose(sigma_x(), field_identity(dims));
  CHECK((t * sz * t.adjoint() + sx).norm() < 1e-14);
  CHECK((t * sx * t.adjoint() + sz).norm() < 1e-14);

  const Matrix n = compose(qubit_identity(), number_operator(dims));
  CHECK(commutator(t, n).norm() == 0.0);
}

TEST_CASE("T is unitary on the interior block") {
  const HilbertDims dims{40, 8};
  PhysParams p;
  p.beta = 0.3;
  p.gamma_flux = 0.2;
  const Matrix t = build_T(p, dims);
  CHECK(restricted_unitarity_defect(t, interior_joint_indices(dims)) <= 1e-8);

  p.beta = Complex{0.3, 0.1};
  CHECK(restricted_unitarity_defect(build_T(p, dims), interior_joint_indices(dims)) <= 1e-8);
}

TEST_CASE("small rotation parameters") {
  PhysParams p;  // hbar_omega = 10, E_J = 1, beta = 0.25
  const Complex eps1 = rotation_eps1(p);
  const Complex eps2 = rotation_eps2(p);
  CHECK(eps1.real() == 0.0);
  CHECK(eps1.imag() == doctest::Approx(-2.5 / 18.0).epsilon(1e-15));
  CHECK(eps1.imag() == doctest::Approx(-0.138889).epsilon(1e-5));
  CHECK(eps2.imag() == doctest::Approx(-2.5 / 22.0).epsilon(1e-15));
  CHECK(eps2.imag() == doctest::Approx(-0.113636).epsilon(1e-5));

  p.beta = 0.0;
  const HilbertDims dims{12, 4};
  const auto r = build_small_rotations(p, dims);
  CHECK(r.eps1 == Complex{0.0, 0.0});
  CHECK(r.eps2 == Complex{0.0, 0.0});
  CHECK(r.u1 == Matrix::Identity(24, 24));
  CHECK(r.u2 == Matrix::Identity(24, 24));
}

TEST_CASE("rotation generators are anti-Hermitian after scaling") {
  const HilbertDims dims{20, 4};
  const PhysParams p;
  const Matrix g1 = rotation_eps1(p) * rotation_generator1(dims);
  const Matrix g2 = rotation_eps2(p) * rotation_generator2(dims);
  CHECK((g1.adjoint() + g1).norm() <= 1e-12);
  CHECK((g2.adjoint() + g2).norm() <= 1e-12);
}

TEST_CASE("small rotations: unitarity and error paths") {
  const HilbertDims dims{40, 10};
  const auto r = build_small_rotations(PhysParams{}, dims);
  const auto interior = interior_joint_indices(dims);
  CHECK(restricted_unitarity_defect(r.u1, interior) <= 1e-8);
  CHECK(restricted_unitarity_defect(r.u2, interior) <= 1e-8);

  PhysParams resonant;
  resonant.e_j = resonant.hbar_omega;
  CHECK(kind_of([&] { build_small_rotations(resonant, dims); }) == ErrorKind::ResonanceSingularity);

  PhysParams complex_beta;
  complex_beta.beta = Complex{0.25, 0.1};
  CHECK(kind_of([&] { build_small_rotations(complex_beta, dims); }) == ErrorKind::NonRealBeta);

  PhysParams big;
  big.beta = 0.5;  // |eps1| = 5/18
  CHECK(kind_of([&] { build_small_rotations(big, dims); }) == ErrorKind::EpsilonTooLarge);
}

TEST_CASE("property: first-order rotation error is second order") {
  const HilbertDims dims{8, 4};
  const PhysParams p;
  const auto r = build_small_rotations(p, dims);
  std::mt19937 rng(31);
  const struct {
    const Matrix& gen;
    const Matrix& u;
    Complex eps;
  } cases[] = {{r.generator1, r.u1, r.eps1}, {r.generator2, r.u2, r.eps2}};
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix h = testing::random_hermitian(dims.joint_dim(), rng);
    for (const auto& c : cases) {
      const Matrix exact = c.u * h * c.u.adjoint();
      const Matrix first = h + c.eps * commutator(c.gen, h);
      const double a_norm = spectral_norm(c.gen);
      const double bound = 2.0 * std::norm(c.eps) * a_norm * a_norm * h.norm();
      CHECK((exact - first).norm() <= bound);
    }
  }
}

TEST_CASE("only the drive-cancelling pairing removes the first-order drive") {
  const HilbertDims dims{30, 6};
  const PhysParams p;
  const Matrix h0 = compose(qubit_identity(), p.hbar_omega * number_operator(dims)) +
                    compose(0.5 * p.e_j * sigma_z(), field_identity(dims));
  const Matrix drive = jc_drive_term(p, dims);
  auto first_order_remainder = [&](RotationPairing pairing) {
    const auto r = build_small_rotations(p, dims, pairing);
    const Matrix shift =
        r.eps_on_generator1() * commutator(r.generator1, h0) + r.eps_on_generator2() * commutator(r.generator2, h0);
    return (drive + shift).norm() / drive.norm();
  };
  CHECK(first_order_remainder(RotationPairing::DriveCancelling) < 1e-12);
  CHECK(first_order_remainder(RotationPairing::AsPrinted) > 0.1);
}

TEST_CASE("U_R rotates sigma_z onto sigma_x") {
  const Matrix ur = ur_qubit();
  CHECK((ur * sigma_z() * ur.adjoint() - sigma_x()).norm() < 1e-15);
  CHECK((ur * ur.adjoint() - qubit_identity()).norm() < 1e-15);
  const Matrix exact = func_of_hermitian(sigma_y(), ScalarFunction::exp_i_scale(-M_PI / 4.0));
  CHECK((ur - exact).norm() < 1e-15);

  // |g> = (|+> - |->)/sqrt2 with |pm> = (|e> pm |g>)/sqrt2; U_R|g> = -|->.
  Vector g(2), plus(2), minus(2);
  g << 0.0, 1.0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  CHECK(((plus - minus) / std::sqrt(2.0) - g).norm() < 1e-15);
  CHECK((ur * g + minus).norm() < 1e-15);

  const HilbertDims dims{10, 4};
  const Matrix full = build_UR(dims);
  CHECK(unitarity_defect(full) < 1e-14);
}
