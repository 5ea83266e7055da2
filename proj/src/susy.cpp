#include "susyd/susy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace susyd::susy {

namespace {

constexpr int kNormIntervals = 200'000;
constexpr double kStrengthMatchTol = 1e-9;

void require_matched(const Superpotential& w,
                     const hulthen::HulthenPotential& pot, const char* who) {
  const double expected = 1.0 + 2.0 * w.kappa();
  if (std::abs(pot.strength() - expected) >
      kStrengthMatchTol * std::max(1.0, expected))
    throw std::invalid_argument(std::string(who) +
                                ": strength must equal 1 + 2 kappa");
}

}  // namespace

Superpotential::Superpotential(double kappa) : kappa_(kappa) {
  if (!(kappa > 0.0))
    throw std::invalid_argument("Superpotential: requires kappa > 0");
}

double Superpotential::value(double x) const {
  if (!(x > 0.0))
    throw std::invalid_argument("Superpotential::value: requires x > 0");
  return kappa_ - 1.0 / std::expm1(x);
}

double Superpotential::derivative(double x) const {
  if (!(x > 0.0))
    throw std::invalid_argument("Superpotential::derivative: requires x > 0");
  const double u = std::expm1(x);
  return (1.0 + u) / (u * u);
}

Superpotential superpotential_from_strength(double v0) {
  if (!(v0 > 1.0))
    throw std::invalid_argument(
        "superpotential_from_strength: requires V0 > 1");
  return Superpotential((v0 - 1.0) / 2.0);
}

double riccati_residual(const Superpotential& w,
                        const hulthen::HulthenPotential& pot, double x) {
  const double wx = w.value(x);
  return -w.derivative(x) + wx * wx -
         (pot.value(x) - w.factorization_energy());
}

PartnerPotential::PartnerPotential(double kappa) : kappa_(kappa) {
  if (!(kappa > 0.0))
    throw std::invalid_argument("PartnerPotential: requires kappa > 0");
}

double PartnerPotential::value(double x) const {
  if (!(x > 0.0))
    throw std::invalid_argument("PartnerPotential::value: requires x > 0");
  const double u = std::expm1(x);
  // 1/(2 sinh^2(x/2)) == 2 (1+u)/u^2, stable at both ends
  return -(1.0 + 2.0 * kappa_) / u + 2.0 * (1.0 + u) / (u * u);
}

PartnerPotential partner_potential(const Superpotential& w) {
  return PartnerPotential(w.kappa());
}

Wavefunction apply_A(const Superpotential& w, const Wavefunction& psi) {
  if (!psi.value || !psi.derivative)
    throw std::invalid_argument("apply_A: sampler needs value and derivative");
  Wavefunction out;
  out.value = [w, psi](double x) {
    if (x == 0.0) return 0.0;  // limit of psi' + w psi for psi ~ x
    return psi.derivative(x) + w.value(x) * psi.value(x);
  };
  if (psi.second_derivative) {
    out.derivative = [w, psi](double x) {
      if (x == 0.0) return 0.0;
      return psi.second_derivative(x) + w.derivative(x) * psi.value(x) +
             w.value(x) * psi.derivative(x);
    };
  }
  return out;
}

PartnerState partner_state(double v0) {
  if (!(v0 > 4.0 && v0 < 9.0))
    throw std::domain_error(
        "partner_state: requires V0 in (4, 9), the two-level configuration");
  const hulthen::BoundState psi2(v0, 2);
  const auto e1 = hulthen::eigenvalue(v0, 1);
  const auto e2 = hulthen::eigenvalue(v0, 2);
  const Superpotential w = superpotential_from_strength(v0);

  const double darboux_scale = 1.0 / std::sqrt(e2.energy - e1.energy);
  const Wavefunction raw = apply_A(w, psi2.wavefunction());

  const double x_max = std::max(30.0, 30.0 / e2.k);
  const double raw_norm_sq = integrate_simpson(
      [&](double x) {
        const double v = darboux_scale * raw.value(x);
        return v * v;
      },
      0.0, x_max, kNormIntervals);

  PartnerState state;
  state.energy = e2.energy;
  state.analytic_norm = std::sqrt(raw_norm_sq);
  const double scale = darboux_scale / state.analytic_norm;
  state.wavefunction.value = [raw, scale](double x) {
    return scale * raw.value(x);
  };
  if (raw.derivative) {
    state.wavefunction.derivative = [raw, scale](double x) {
      return scale * raw.derivative(x);
    };
  }
  return state;
}

double intertwining_residual(const Superpotential& w,
                             const hulthen::HulthenPotential& pot,
                             const Wavefunction& phi, const Grid& grid) {
  if (!phi.value || !phi.derivative || !phi.second_derivative)
    throw std::invalid_argument(
        "intertwining_residual: phi needs value and two derivatives");
  require_matched(w, pot, "intertwining_residual");
  if (grid.points < 7)
    throw std::invalid_argument("intertwining_residual: grid too small");

  const int n = grid.points;
  const double h = grid.step();
  const PartnerPotential partner = partner_potential(w);

  std::vector<double> a(n), b(n), phi_v(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x(i);
    const double v = phi.value(x);
    phi_v[i] = v;
    a[i] = phi.derivative(x) + w.value(x) * v;              // A phi
    b[i] = -phi.second_derivative(x) + pot.value(x) * v;    // H phi
  }

  double phi_norm_sq = 0.0;
  double res_sq = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const double x = grid.x(i);
    const double lhs = -second_derivative_5pt(a, i, h) + partner.value(x) * a[i];
    const double rhs = derivative_5pt(b, i, h) + w.value(x) * b[i];
    const double r = lhs - rhs;
    res_sq += r * r;
    phi_norm_sq += phi_v[i] * phi_v[i];
  }
  if (phi_norm_sq == 0.0)
    throw std::invalid_argument("intertwining_residual: zero test function");
  return std::sqrt(res_sq / phi_norm_sq);
}

double partner_zero_mode(const Superpotential& w, double x) {
  if (!(x > 0.0))
    throw std::invalid_argument("partner_zero_mode: requires x > 0");
  return std::exp(w.kappa() * x) / -std::expm1(-x);
}

SusyClassification classify_susy(double v0, double eps) {
  if (!(v0 > 1.0))
    throw std::invalid_argument("classify_susy: requires V0 > 1");
  SusyClassification result;
  const int count = hulthen::bound_state_count(v0);
  for (int n = 1; n <= count; ++n) {
    const double energy = hulthen::eigenvalue(v0, n).energy;
    const double scale = std::max({std::abs(eps), std::abs(energy), 1e-300});
    if (std::abs(eps - energy) <= 1e-12 * scale) {
      result.phase = SusyPhase::unbroken;
      result.missing_level = n;
      return result;
    }
  }
  result.phase = SusyPhase::broken;
  return result;
}

}  // namespace susyd::susy
