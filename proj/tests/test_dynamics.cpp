#include "doctest.h"
#include "sqcat/dynamics.hpp"
#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace sqcat;

TEST_CASE("propagator basics") {
  std::mt19937 rng(1);
  const Matrix h = testing::random_hermitian(12, rng);
  CHECK((propagator(h, 0.0) - Matrix::Identity(12, 12)).norm() < 1e-13);

  const Propagator prop(h);
  const Matrix u1 = prop.at(0.4);
  const Matrix u2 = prop.at(1.1);
  CHECK((u1 * u2 - prop.at(1.5)).norm() < 1e-9);
  CHECK(unitarity_defect(prop.at(2.0)) < 1e-9 * 12);
}

TEST_CASE("free field rotates coherent states") {
  const HilbertDims dims{60, 12};
  const double omega = 10.0;
  const Propagator prop(omega * number_operator(dims));
  for (const double t : {0.1, 0.37, 1.0}) {
    const FieldState out = evolve_field(prop, coherent_state(1.0, dims), t);
    const FieldState expected = coherent_state(std::exp(-kI * (omega * t)), dims);
    CHECK(std::norm(expected.amplitudes.dot(out.amplitudes)) >= 1.0 - 1e-9);
  }
}

TEST_CASE("evolve on trivial grids and stationary states") {
  const HilbertDims dims{20, 5};
  const PhysParams p;
  const Matrix h = build_H_SS(p, dims);
  const JointState psi0 = product_state(Qubit::g, coherent_state(0.5, dims));

  const auto one = evolve(h, psi0, TimeGrid{0.0, 0.0, 1});
  REQUIRE(one.states.size() == 1);
  CHECK(one.states[0].amplitudes == psi0.amplitudes);

  const auto spectrum = hermitian_eig(h);
  const JointState eig{dims, spectrum.eigenvectors.col(3)};
  const auto traj = evolve(h, eig, TimeGrid{0.0, 5.0, 11});
  for (const auto& s : traj.states) CHECK(std::abs(std::abs(eig.amplitudes.dot(s.amplitudes)) - 1.0) < 1e-12);
}

TEST_CASE("H_SS trajectory conserves norm and energy and reverses") {
  const HilbertDims dims = kDynamicsDims;
  const PhysParams p;
  const Matrix h = build_H_SS(p, dims);
  const JointState psi0 = product_state(Qubit::g, coherent_state(1.0, dims));
  const auto traj = evolve(h, psi0, TimeGrid{0.0, 3.0, 61});
  REQUIRE_FALSE(traj.aborted());
  REQUIRE(traj.states.size() == 61);
  const double e0 = expectation(h, psi0.amplitudes);
  const double hnorm = spectral_norm(h);
  double worst_norm = 0.0;
  double worst_energy = 0.0;
  for (const auto& s : traj.states) {
    worst_norm = std::max(worst_norm, std::abs(s.norm() - 1.0));
    worst_energy = std::max(worst_energy, std::abs(expectation(h, s.amplitudes) - e0));
  }
  CHECK(worst_norm < 1e-9);
  CHECK(worst_energy <= 1e-8 * hnorm);

  const Propagator prop(h);
  const Vector back = prop.apply(traj.states.back().amplitudes, -3.0);
  CHECK(std::norm(psi0.amplitudes.dot(back)) >= 1.0 - 1e-9);
}

TEST_CASE("leakage abort truncates the trajectory") {
  const HilbertDims dims{16, 4};
  const Matrix a = annihilation(dims);
  // Drives a linear displacement of the vacuum out of the trusted levels.
  const Matrix h = compose(qubit_identity(), kI * (a.adjoint() - a));
  const JointState psi0 = product_state(Qubit::e, fock_state(0, dims));
  const auto traj = evolve(h, psi0, TimeGrid{0.0, 4.0, 41});
  REQUIRE(traj.aborted());
  CHECK(traj.abort_leakage > kTrajectoryLeakageLimit);
  CHECK(traj.states.size() < 41);
  CHECK(traj.states.size() == traj.times.size());
  for (const double l : traj.leakages) CHECK(l <= kTrajectoryLeakageLimit);
  CHECK(*traj.aborted_at > traj.times.back());
}

TEST_CASE("time grid validation") {
  CHECK_THROWS_AS((TimeGrid{1.0, 0.0, 5}.validate()), Error);
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 1}.validate()), Error);
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0}.validate()), Error);
  const TimeGrid g{0.0, 3.0, 61};
  CHECK(g.step() == doctest::Approx(0.05));
  CHECK(g.at(60) == 3.0);

  const HilbertDims dims{10, 2};
  CHECK_THROWS_AS(evolve(Matrix::Identity(4, 4), product_state(Qubit::g, fock_state(0, dims)), g), Error);
}
