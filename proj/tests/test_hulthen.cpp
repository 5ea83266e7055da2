#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "susyd/hulthen.hpp"

using namespace susyd;
using hulthen::BoundState;
using hulthen::HulthenPotential;

TEST_CASE("potential: value at ln 2 and exponential tail") {
  const HulthenPotential pot(6.7784);
  CHECK(pot.value(std::log(2.0)) == doctest::Approx(-6.7784).epsilon(1e-12));
  CHECK(std::abs(HulthenPotential(1.0).value(50.0)) < 2e-22);
  CHECK(pot.value(1.0) < 0.0);
  CHECK_THROWS_AS(pot.value(0.0), std::invalid_argument);
  CHECK_THROWS_AS(pot.value(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(HulthenPotential(0.0), std::invalid_argument);
}

TEST_CASE("potential: near-origin expansion branch agrees with the direct formula") {
  // both branch formulas evaluated in extended precision at x = 0.01
  const long double v0 = 6.7784L;
  const long double x = 0.01L;
  const long double direct = -v0 / expm1l(x);
  const long double laurent = -v0 * (1.0L / x - 0.5L + x / 12.0L);
  CHECK(std::abs(static_cast<double>((direct - laurent) / direct)) < 1e-10);

  const HulthenPotential pot(6.7784);
  // frozen oracle value; x = 0.01 sits on the direct branch
  CHECK(pot.value(0.01) ==
        doctest::Approx(-674.45644865725224).epsilon(1e-14));
  CHECK(pot.value(0.01) ==
        doctest::Approx(static_cast<double>(laurent)).epsilon(1e-10));
  // below the switch the expansion branch still matches the direct formula
  CHECK(pot.value(0.99e-4) ==
        doctest::Approx(-6.7784 / std::expm1(0.99e-4)).epsilon(1e-12));
}

TEST_CASE("bound_state_count: strict threshold and enumerated sweep") {
  CHECK(hulthen::bound_state_count(6.7784) == 2);
  CHECK(hulthen::bound_state_count(0.5) == 0);
  CHECK(hulthen::bound_state_count(4.0) == 1);  // strict V0 > n^2
  CHECK(hulthen::bound_state_count(1.0) == 0);
  CHECK(hulthen::bound_state_count(9.0) == 2);
  CHECK(hulthen::bound_state_count(9.0 + 1e-9) == 3);

  oracle::Rng rng(0xc0ffee11);
  for (int i = 0; i < 400; ++i) {
    const double v0 = rng.uniform(1e-3, 120.0);
    int expected = 0;
    for (int n = 1; static_cast<double>(n) * n < v0; ++n) ++expected;
    CHECK(hulthen::bound_state_count(v0) == expected);
  }
}

TEST_CASE("eigenvalue: deuteron-chain and boundary values") {
  const auto e2 = hulthen::eigenvalue(6.7784, 2);
  CHECK(e2.k == doctest::Approx(0.6946).epsilon(1e-12));
  CHECK(e2.energy == doctest::Approx(-0.48246916).epsilon(1e-12));
  CHECK(e2.energy == doctest::Approx(-0.4825).epsilon(5e-4));  // quoted rounding

  const auto e1 = hulthen::eigenvalue(6.7784, 1);
  CHECK(e1.k == doctest::Approx(2.8892).epsilon(1e-12));
  CHECK(e1.energy == doctest::Approx(-8.3475).epsilon(5e-4));  // quoted rounding

  // E_1 -> -2.25 at the lower edge of the two-level domain
  CHECK(hulthen::eigenvalue(4.0 + 1e-9, 1).energy ==
        doctest::Approx(-2.25).epsilon(1e-8));

  CHECK_THROWS_AS(hulthen::eigenvalue(4.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hulthen::eigenvalue(0.9, 1), std::invalid_argument);
  CHECK_THROWS_AS(hulthen::eigenvalue(5.0, 0), std::invalid_argument);
}

TEST_CASE("eigenvalue: strictly increasing in n") {
  for (double v0 : {5.0, 6.7784, 8.5, 17.3}) {
    const auto spectrum = hulthen::analytic_spectrum(v0);
    for (std::size_t i = 1; i < spectrum.levels.size(); ++i)
      CHECK(spectrum.levels[i - 1].energy < spectrum.levels[i].energy);
    if (!spectrum.levels.empty()) CHECK(spectrum.levels.back().energy < 0.0);
    CHECK(spectrum.provenance == hulthen::Provenance::analytic);
  }
}

TEST_CASE("eigenfunction: vanishes at the origin, node structure") {
  const BoundState psi2(6.7784, 2);
  CHECK(psi2.psi(0.0) == 0.0);
  CHECK(BoundState(5.0, 1).psi(0.0) == 0.0);
  // dense sign scan out to max(30, 30/k_n)
  for (double v0 : {5.0, 6.7784, 8.5}) {
    for (int n = 1; n <= 2; ++n) {
      const BoundState state(v0, n);
      const double x_max = std::max(30.0, 30.0 / state.k());
      CHECK(oracle::count_nodes_scan(
                [&state](double x) { return state.psi(x); }, 1e-4, x_max,
                100'000) == n - 1);
    }
  }
  CHECK_THROWS_AS(BoundState(4.0, 2), std::invalid_argument);
}

TEST_CASE("eigenfunction: Schrodinger residual under the finite-difference oracle") {
  for (double v0 : {5.0, 6.7784, 8.5}) {
    const HulthenPotential pot(v0);
    for (int n = 1; n <= 2; ++n) {
      const BoundState state(v0, n);
      const double residual = oracle::schrodinger_residual(
          [&state](double x) { return state.psi(x); },
          [&pot](double x) { return pot.value(x); }, state.energy(), 1e-3,
          30.0, 200'000);
      CHECK(residual < 1e-6);
    }
  }
}

TEST_CASE("eigenfunction: unit norm under an independent quadrature") {
  for (double v0 : {5.0, 6.7784, 8.5}) {
    for (int n = 1; n <= 2; ++n) {
      const BoundState state(v0, n);
      const double x_max = std::max(30.0, 30.0 / state.k());
      const double norm = oracle::integrate_gauss(
          [&state](double x) {
            const double v = state.psi(x);
            return v * v;
          },
          0.0, x_max, 400);
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigenfunction: orthogonality of the two-level pair") {
  oracle::Rng rng(0x0badcafe);
  for (int i = 0; i < 6; ++i) {
    const double v0 = i == 0 ? 6.7784 : rng.uniform(4.2, 8.9);
    const BoundState a(v0, 1);
    const BoundState b(v0, 2);
    const double x_max = std::max(30.0, 30.0 / b.k());
    const double overlap = oracle::integrate_gauss(
        [&](double x) { return a.psi(x) * b.psi(x); }, 0.0, x_max, 400);
    CHECK(std::abs(overlap) < 1e-8);
  }
}

TEST_CASE("eigenfunction: quadrature constant matches the closed form") {
  oracle::Rng rng(0xfeed5eed);
  for (int i = 0; i < 8; ++i) {
    const double v0 = i == 0 ? 6.7784 : rng.uniform(1.5, 30.0);
    const int count = hulthen::bound_state_count(v0);
    for (int n = 1; n <= count && n <= 3; ++n) {
      const BoundState state(v0, n);
      CHECK(state.norm_constant() ==
            doctest::Approx(state.closed_form_constant()).epsilon(1e-8));
    }
  }
}

TEST_CASE("eigenfunction: analytic derivatives agree with finite differences") {
  const BoundState psi2(6.7784, 2);
  for (double x : {0.05, 0.3, 0.6081, 1.0, 2.5, 7.0}) {
    const double h = 1e-5;
    const double fd1 = (psi2.psi(x + h) - psi2.psi(x - h)) / (2.0 * h);
    const double fd2 =
        (psi2.psi(x + h) - 2.0 * psi2.psi(x) + psi2.psi(x - h)) / (h * h);
    CHECK(psi2.psi_prime(x) == doctest::Approx(fd1).epsilon(1e-8).scale(1.0));
    CHECK(psi2.psi_second(x) == doctest::Approx(fd2).epsilon(1e-4).scale(1.0));
  }
}
