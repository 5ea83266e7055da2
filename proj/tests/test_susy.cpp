#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "susyd/hulthen.hpp"
#include "susyd/susy.hpp"

using namespace susyd;
using susy::Superpotential;

TEST_CASE("superpotential_from_strength: kappa = (V0 - 1)/2") {
  CHECK(susy::superpotential_from_strength(6.7784).kappa() ==
        doctest::Approx(2.8892).epsilon(1e-14));
  CHECK(susy::superpotential_from_strength(3.0).kappa() == 1.0);
  CHECK_THROWS_AS(susy::superpotential_from_strength(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(susy::superpotential_from_strength(0.2),
                  std::invalid_argument);
  CHECK_THROWS_AS(Superpotential(0.0), std::invalid_argument);

  // the factorization energy is pinned to E_1 of the matched well
  const auto w = susy::superpotential_from_strength(6.7784);
  CHECK(w.factorization_energy() ==
        doctest::Approx(hulthen::eigenvalue(6.7784, 1).energy).epsilon(1e-14));
}

TEST_CASE("superpotential: limits at both ends") {
  const Superpotential w(2.8892);
  CHECK(w.value(100.0) == doctest::Approx(2.8892).epsilon(1e-12));
  CHECK(1e-8 * w.value(1e-8) == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(w.derivative(1.0) ==
        doctest::Approx(std::exp(1.0) / std::pow(std::expm1(1.0), 2))
            .epsilon(1e-14));
  CHECK_THROWS_AS(w.value(0.0), std::invalid_argument);
}

TEST_CASE("riccati: the particular superpotential solves the equation exactly") {
  for (double v0 : {5.0, 6.7784, 8.5}) {
    const auto w = susy::superpotential_from_strength(v0);
    const hulthen::HulthenPotential pot(v0);
    CHECK(std::abs(susy::riccati_residual(w, pot, 1.0)) < 1e-12);
    CHECK(std::abs(susy::riccati_residual(w, pot, 0.01)) < 1e-9);
    // grid of record
    const Grid grid{1e-3, 30.0, 200'000};
    double worst = 0.0;
    for (int i = 0; i < grid.points; ++i)
      worst = std::max(worst,
                       std::abs(susy::riccati_residual(w, pot, grid.x(i))));
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("riccati: extended-precision cross-check near the origin") {
  const long double kappa = 2.8892L;
  const long double x = 0.01L;
  const long double u = expm1l(x);
  const long double w = kappa - 1.0L / u;
  const long double lhs = -(1.0L + u) / (u * u) + w * w;
  const long double rhs = -(1.0L + 2.0L * kappa) / u + kappa * kappa;
  CHECK(std::abs(static_cast<double>(lhs - rhs)) < 1e-12);
}

TEST_CASE("riccati: a mismatched strength shows up as the perturbation term") {
  const auto w = susy::superpotential_from_strength(6.7784);
  const hulthen::HulthenPotential mismatched(6.7784 + 0.1);
  for (double x : {0.5, 1.0, 2.0}) {
    const double expected = 0.1 / std::expm1(x);
    CHECK(susy::riccati_residual(w, mismatched, x) ==
          doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("partner potential: closed form equals V + 2 w'") {
  const auto w = susy::superpotential_from_strength(6.7784);
  const auto partner = susy::partner_potential(w);
  const hulthen::HulthenPotential pot(1.0 + 2.0 * w.kappa());
  CHECK(partner.strength() == doctest::Approx(6.7784).epsilon(1e-14));
  for (double x : {0.1, 1.0, 5.0})
    CHECK(std::abs(partner.value(x) -
                   (pot.value(x) + 2.0 * w.derivative(x))) < 1e-12);
  const Grid grid{1e-3, 30.0, 50'000};
  for (int i = 0; i < grid.points; ++i) {
    const double x = grid.x(i);
    const double lhs = partner.value(x);
    const double rhs = pot.value(x) + 2.0 * w.derivative(x);
    CHECK(std::abs(lhs - rhs) <=
          1e-12 * std::max({std::abs(lhs), std::abs(rhs), 1.0}));
  }
}

TEST_CASE("partner potential: repulsive core asymptotics and decay") {
  const auto partner = susy::PartnerPotential(2.8892);
  const auto approx = [](double kappa, double x) {
    return -(1.0 + 2.0 * kappa) / x + 2.0 / (x * x);
  };
  CHECK(std::abs(partner.value(0.01) - approx(2.8892, 0.01)) /
            std::abs(partner.value(0.01)) <
        0.01);
  CHECK(std::abs(partner.value(0.1) - approx(2.8892, 0.1)) /
            std::abs(partner.value(0.1)) <
        0.05);
  CHECK(std::abs(partner.value(30.0)) < 1e-10);
  // leading 2/x^2 barrier
  CHECK(partner.value(1e-6) ==
        doctest::Approx(2.0 / 1e-12).epsilon(1e-2));
  CHECK(partner.value(1e-6) > 0.0);
}

TEST_CASE("apply_A: annihilates the ground state at kappa = k_1") {
  const double v0 = 6.7784;
  const auto w = susy::superpotential_from_strength(v0);
  const hulthen::BoundState psi1(v0, 1);
  const auto a_psi1 = susy::apply_A(w, psi1.wavefunction());
  const double num = integrate_simpson(
      [&a_psi1](double x) {
        const double v = a_psi1.value(x);
        return v * v;
      },
      0.0, 30.0, 200'000);
  const double den = integrate_simpson(
      [&psi1](double x) {
        const double v = psi1.psi(x);
        return v * v;
      },
      0.0, 30.0, 200'000);
  CHECK(std::sqrt(num / den) < 1e-8);
}

TEST_CASE("apply_A: linearity on the zero function, nodeless image of psi_2") {
  const auto w = susy::superpotential_from_strength(6.7784);
  Wavefunction zero;
  zero.value = [](double) { return 0.0; };
  zero.derivative = [](double) { return 0.0; };
  const auto a_zero = susy::apply_A(w, zero);
  for (double x : {0.0, 0.3, 1.0, 10.0}) CHECK(a_zero.value(x) == 0.0);

  const hulthen::BoundState psi2(6.7784, 2);
  const auto a_psi2 = susy::apply_A(w, psi2.wavefunction());
  CHECK(oracle::count_nodes_scan(a_psi2.value, 1e-4, 30.0, 100'000) == 0);
  CHECK(a_psi2.value(0.0) == 0.0);

  // derivative of the image against finite differences
  for (double x : {0.2, 1.0, 3.0}) {
    const double h = 1e-5;
    const double fd = (a_psi2.value(x + h) - a_psi2.value(x - h)) / (2.0 * h);
    CHECK(a_psi2.derivative(x) == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
  }

  Wavefunction value_only;
  value_only.value = [](double) { return 1.0; };
  CHECK_THROWS_AS(susy::apply_A(w, value_only), std::invalid_argument);
}

TEST_CASE("partner_state: Darboux normalization and quadrature renorm") {
  const auto state = susy::partner_state(6.7784);
  CHECK(state.energy ==
        doctest::Approx(hulthen::eigenvalue(6.7784, 2).energy).epsilon(1e-14));
  // (E2 - E1)^{-1/2} alone already normalizes the image
  CHECK(std::abs(state.analytic_norm - 1.0) < 1e-6);
  // after renormalization, unit norm under an independent quadrature
  const double norm = oracle::integrate_gauss(
      [&state](double x) {
        const double v = state.wavefunction.value(x);
        return v * v;
      },
      0.0, 45.0, 450);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(state.wavefunction.value(0.0) == 0.0);
  CHECK(oracle::count_nodes_scan(state.wavefunction.value, 1e-4, 30.0,
                                 100'000) == 0);
}

TEST_CASE("partner_state: x^2 behavior near the origin") {
  const auto state = susy::partner_state(6.7784);
  const double slope = oracle::loglog_slope(state.wavefunction.value, 1e-3,
                                            1e-2, 50);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("partner_state: eigenstate of the partner well at E_2") {
  const auto state = susy::partner_state(6.7784);
  const susy::PartnerPotential partner(
      susy::superpotential_from_strength(6.7784).kappa());
  const double residual = oracle::schrodinger_residual(
      state.wavefunction.value,
      [&partner](double x) { return partner.value(x); }, state.energy, 1e-3,
      30.0, 200'000);
  CHECK(residual < 1e-6);
}

TEST_CASE("partner_state: matches the closed form e^{-kx}(1 - e^{-x})^2") {
  // independent of the Darboux route: psi~ for a two-level well is
  // proportional to (1 - e^{-x}) psi_H with the same decay constant
  const auto state = susy::partner_state(6.7784);
  const double k2 = hulthen::eigenvalue(6.7784, 2).k;
  const auto closed = [k2](double x) {
    const double f = -std::expm1(-x);
    return std::exp(-k2 * x) * f * f;
  };
  const double ref = state.wavefunction.value(0.5) / closed(0.5);
  for (double x = 0.05; x <= 20.0; x += 0.05) {
    CHECK(state.wavefunction.value(x) / closed(x) ==
          doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("partner_state: requires the two-level domain") {
  CHECK_THROWS_AS(susy::partner_state(4.0), std::domain_error);
  CHECK_THROWS_AS(susy::partner_state(9.0), std::domain_error);
  CHECK_THROWS_AS(susy::partner_state(3.5), std::domain_error);
  CHECK_THROWS_AS(susy::partner_state(12.0), std::domain_error);
}

TEST_CASE("intertwining: residual is pure discretization") {
  const double v0 = 6.7784;
  const auto w = susy::superpotential_from_strength(v0);
  const hulthen::HulthenPotential pot(v0);
  const hulthen::BoundState psi2(v0, 2);

  const double r_record =
      susy::intertwining_residual(w, pot, psi2.wavefunction(),
                                  Grid{1e-3, 30.0, 200'000});
  CHECK(r_record < 1e-6);

  Wavefunction phi;
  phi.value = [](double x) { return x * x * std::exp(-x); };
  phi.derivative = [](double x) { return (2.0 * x - x * x) * std::exp(-x); };
  phi.second_derivative = [](double x) {
    return (2.0 - 4.0 * x + x * x) * std::exp(-x);
  };
  CHECK(susy::intertwining_residual(w, pot, phi, Grid{1e-3, 30.0, 200'000}) <
        1e-5);

  // O(h^4) convergence under refinement x2
  const double coarse = susy::intertwining_residual(
      w, pot, psi2.wavefunction(), Grid{1e-3, 30.0, 1000});
  const double fine = susy::intertwining_residual(
      w, pot, psi2.wavefunction(), Grid{1e-3, 30.0, 2000});
  CHECK(std::log2(coarse / fine) >= 3.5);
}

TEST_CASE("intertwining: rejects degenerate input") {
  const auto w = susy::superpotential_from_strength(6.7784);
  const hulthen::HulthenPotential pot(6.7784);
  Wavefunction zero;
  zero.value = [](double) { return 0.0; };
  zero.derivative = [](double) { return 0.0; };
  zero.second_derivative = [](double) { return 0.0; };
  CHECK_THROWS_AS(
      susy::intertwining_residual(w, pot, zero, Grid{1e-3, 30.0, 1000}),
      std::invalid_argument);

  const hulthen::HulthenPotential off_pair(6.9);
  CHECK_THROWS_AS(susy::intertwining_residual(w, off_pair, zero,
                                              Grid{1e-3, 30.0, 1000}),
                  std::invalid_argument);
}

TEST_CASE("classification: unbroken exactly on the spectrum") {
  const double e1 = hulthen::eigenvalue(6.7784, 1).energy;
  const auto unbroken = susy::classify_susy(6.7784, e1);
  CHECK(unbroken.phase == susy::SusyPhase::unbroken);
  CHECK(unbroken.missing_level == 1);

  const auto broken = susy::classify_susy(6.7784, -1.0);
  CHECK(broken.phase == susy::SusyPhase::broken);
  CHECK_FALSE(broken.missing_level.has_value());

  const auto second = susy::classify_susy(5.0, -0.0625);
  CHECK(second.phase == susy::SusyPhase::unbroken);
  CHECK(second.missing_level == 2);

  // relative 1e-12 matching window
  CHECK(susy::classify_susy(6.7784, e1 * (1.0 + 1e-13)).phase ==
        susy::SusyPhase::unbroken);
  CHECK(susy::classify_susy(6.7784, e1 * (1.0 + 1e-9)).phase ==
        susy::SusyPhase::broken);
  CHECK_THROWS_AS(susy::classify_susy(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("classification: the A-dagger zero mode is never normalizable") {
  const Superpotential w(2.8892);
  const auto density = [&w](double x) {
    const double v = susy::partner_zero_mode(w, x);
    return v * v;
  };
  const double to_5 = oracle::integrate_gauss(density, 0.1, 5.0, 200);
  const double to_15 = oracle::integrate_gauss(density, 0.1, 15.0, 600);
  CHECK(to_15 > 1e6 * to_5);
  // 1/x divergence toward the origin
  CHECK(1e-6 * susy::partner_zero_mode(w, 1e-6) ==
        doctest::Approx(1.0).epsilon(1e-4));
}
