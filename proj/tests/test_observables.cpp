#include "doctest.h"
#include "sqcat/analytics.hpp"
#include "sqcat/error.hpp"
#include "sqcat/hamiltonians.hpp"
#include "sqcat/observables.hpp"

#include <cmath>
#include <numbers>

using namespace sqcat;

namespace {

const double kTwoOverPi = 2.0 / std::numbers::pi;

FieldState squeezed_vacuum(double r, const HilbertDims& dims) {
  const PhysParams p;
  const double t = r / (2.0 * squeeze_rate(p));
  return analytic_components(0.0, t, p, dims, AnalyticMode::OmegaStripped).branch_plus_state();
}

}  // namespace

TEST_CASE("quadrature conventions") {
  const HilbertDims dims{40, 8};
  const auto vac = quadrature_stats(fock_state(0, dims));
  CHECK(vac.var_x == doctest::Approx(0.25));
  CHECK(vac.var_p == doctest::Approx(0.25));
  CHECK(vac.min_var_over_rotations == doctest::Approx(0.25));

  const auto coh = quadrature_stats(coherent_state(1.0, dims));
  CHECK(coh.mean_x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(coh.mean_p) < 1e-14);
  CHECK(coh.var_x == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(coh.var_p == doctest::Approx(0.25).epsilon(1e-12));

  const auto sq = quadrature_stats(squeezed_vacuum(0.5, kDynamicsDims));
  CHECK(std::abs(sq.min_var_over_rotations - std::exp(-1.0) / 4.0) < 1e-6);
  CHECK(std::abs(sq.min_var_over_rotations - 0.091970) < 1e-6);
}

TEST_CASE("photon distributions") {
  const HilbertDims dims{40, 8};
  const auto vac = photon_distribution(fock_state(0, dims));
  CHECK(vac[0] == 1.0);
  CHECK(vac[1] == 0.0);

  const auto coh = photon_distribution(coherent_state(1.0, dims));
  double poisson = std::exp(-1.0);
  double total = 0.0;
  for (int n = 0; n < 40; ++n) {
    CHECK(std::abs(coh[n] - poisson) < 1e-8);
    total += coh[n];
    poisson /= (n + 1);
  }
  CHECK(std::abs(total - 1.0) < 1e-10);

  const auto sq = photon_distribution(squeezed_vacuum(0.5, kDynamicsDims));
  for (std::size_t n = 1; n < sq.size(); n += 2) CHECK(sq[n] < 1e-12);
}

TEST_CASE("Wigner anchors") {
  const HilbertDims dims = kDynamicsDims;
  CHECK(std::abs(wigner_at(fock_state(0, dims), 0.0) - kTwoOverPi) < 1e-6);
  CHECK(std::abs(wigner_at(coherent_state(1.0, dims), 1.0) - kTwoOverPi) < 1e-6);
  CHECK(std::abs(wigner_at(fock_state(1, dims), 0.0) + kTwoOverPi) < 1e-6);
}

TEST_CASE("Wigner grid normalization and bounds") {
  const HilbertDims dims = kDynamicsDims;
  const WignerSpec spec{-4.0, 4.0, -4.0, 4.0, 41};
  for (const FieldState& s : {coherent_state(Complex{0.8, -0.3}, dims), squeezed_vacuum(0.5, dims)}) {
    const auto grid = wigner(s, spec);
    CHECK(grid.integral() >= 0.97);
    CHECK(grid.integral() <= 1.03);
    CHECK(grid.min() >= -kTwoOverPi - 1e-6);
  }
}

TEST_CASE("Wigner displacement covariance") {
  const HilbertDims dims = kDynamicsDims;
  const FieldState psi = coherent_state(0.5, dims);
  const Complex delta{0.3, -0.2};
  const FieldState shifted{dims, displacement(delta, dims) * psi.amplitudes};
  for (const Complex alpha : {Complex{0.0, 0.0}, Complex{0.8, -0.2}, Complex{-0.5, 1.0}})
    CHECK(std::abs(wigner_at(shifted, alpha) - wigner_at(psi, alpha - delta)) < 1e-6);
}

TEST_CASE("cat component negativity") {
  const HilbertDims dims = kDynamicsDims;
  const PhysParams p;
  const double t = 0.4 / (2.0 * squeeze_rate(p));
  const WignerSpec spec{-3.0, 3.0, -3.0, 3.0, 61};

  // Omega-stripped: opposite squeezing is fully developed, strong fringes.
  const auto stripped = SqueezedCatOracle(1.0, p, dims, AnalyticMode::OmegaStripped).psi_TR(t);
  const auto stripped_grid = wigner(measure_qubit(stripped, Qubit::g).collapsed, spec);
  CHECK(stripped_grid.min() < -0.05);

  // Physical frame: the fast rotation averages the squeezing, leaving only
  // a faint negative region. Anchor frozen from an independent evaluation.
  const auto physical = SqueezedCatOracle(1.0, p, dims).psi_TR(t);
  const auto grid = wigner(measure_qubit(physical, Qubit::g).collapsed, spec);
  CHECK(grid.min() < 0.0);
  CHECK(grid.min() == doctest::Approx(-8.7386e-12).epsilon(1e-3));
}

TEST_CASE("squeezing law under the omega-stripped branch generator") {
  const HilbertDims dims = kDynamicsDims;
  const PhysParams p;
  const Propagator prop(h_ss_field_block(p, dims, +1, 0.0));
  const FieldState vac = fock_state(0, dims);
  for (const double r : {0.1, 0.5, 1.0}) {
    const double t = r / (2.0 * squeeze_rate(p));
    const auto stats = quadrature_stats(evolve_field(prop, vac, t));
    CHECK(std::abs(stats.min_var_over_rotations - std::exp(-2.0 * r) / 4.0) < 1e-6);
    CHECK(stats.var_x * stats.var_p >= 1.0 / 16.0 - 1e-9);
  }
}

TEST_CASE("Wigner preconditions") {
  const HilbertDims dims{20, 6};
  const WignerSpec wide{-4.0, 4.0, -4.0, 4.0, 5};
  try {
    wigner(fock_state(0, dims), wide);
    FAIL("expected TrustRegionViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrustRegionViolation);
  }
  CHECK_THROWS_AS(wigner(fock_state(0, dims), WignerSpec{1.0, -1.0, -1.0, 1.0, 5}), Error);
  CHECK_THROWS_AS(wigner(fock_state(0, dims), WignerSpec{-1.0, 1.0, -1.0, 1.0, 1}), Error);
}
