#include "susyd/hulthen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace susyd::hulthen {

namespace {

constexpr double kOriginBranch = 1e-4;
constexpr int kNormIntervals = 200'000;

double norm_domain(double k) { return std::max(30.0, 30.0 / k); }

}  // namespace

HulthenPotential::HulthenPotential(double v0) : v0_(v0) {
  if (!(v0 > 0.0))
    throw std::invalid_argument("HulthenPotential: requires V0 > 0");
}

double HulthenPotential::value(double x) const {
  if (!(x > 0.0))
    throw std::invalid_argument("HulthenPotential::value: requires x > 0");
  if (x < kOriginBranch)
    return -v0_ * (1.0 / x - 0.5 + x / 12.0);
  return -v0_ / std::expm1(x);
}

int bound_state_count(double v0) {
  if (!(v0 > 0.0))
    throw std::invalid_argument("bound_state_count: requires V0 > 0");
  int n = static_cast<int>(std::floor(std::sqrt(v0)));
  while (static_cast<double>(n + 1) * (n + 1) < v0) ++n;
  while (n >= 1 && !(v0 > static_cast<double>(n) * n)) --n;
  return n;
}

EnergyLevel eigenvalue(double v0, int n) {
  if (n < 1) throw std::invalid_argument("eigenvalue: requires n >= 1");
  if (!(v0 > static_cast<double>(n) * n))
    throw std::invalid_argument("eigenvalue: no bound state, requires V0 > n^2");
  EnergyLevel level;
  level.n = n;
  level.k = (v0 - static_cast<double>(n) * n) / (2.0 * n);
  level.energy = -level.k * level.k;
  return level;
}

BoundState::BoundState(double v0, int n)
    : n_(n),
      k_(eigenvalue(v0, n).k),
      energy_(-k_ * k_),
      norm_(1.0),
      poly_(2.0 * k_ + 1.0 + n, n - 1, 2.0 * k_ + 1.0) {
  const double x_max = norm_domain(k_);
  const double integral = integrate_simpson(
      [this](double x) {
        const double p = psi(x);
        return p * p;
      },
      0.0, x_max, kNormIntervals);
  norm_ = 1.0 / std::sqrt(integral);
}

double BoundState::psi(double x) const {
  if (x == 0.0) return 0.0;
  const double z = std::exp(-x);
  const double f = -std::expm1(-x);  // 1 - e^{-x}, full precision near 0
  return norm_ * std::exp(-k_ * x) * f * poly_(z);
}

double BoundState::psi_prime(double x) const {
  const double z = std::exp(-x);
  const double f = -std::expm1(-x);
  const double p = poly_(z);
  const double dp = poly_.derivative(z);
  return norm_ * std::exp(-k_ * x) * (-k_ * f * p + z * p - z * f * dp);
}

double BoundState::psi_second(double x) const {
  const double z = std::exp(-x);
  const double f = -std::expm1(-x);
  const double p = poly_(z);
  const double dp = poly_.derivative(z);
  const double d2p = poly_.second_derivative(z);
  const double bracket = k_ * k_ * f * p - (2.0 * k_ + 1.0) * z * p +
                         (2.0 * k_ + 1.0) * z * f * dp - 2.0 * z * z * dp +
                         z * z * f * d2p;
  return norm_ * std::exp(-k_ * x) * bracket;
}

double BoundState::closed_form_constant() const {
  return std::sqrt(2.0 * k_ * (n_ + k_) * (n_ + 2.0 * k_)) *
         specfun::gamma_ratio(n_, k_);
}

Wavefunction BoundState::wavefunction() const {
  BoundState copy = *this;
  return Wavefunction{
      [copy](double x) { return copy.psi(x); },
      [copy](double x) { return copy.psi_prime(x); },
      [copy](double x) { return copy.psi_second(x); },
  };
}

BoundState eigenfunction(double v0, int n) { return BoundState(v0, n); }

Spectrum analytic_spectrum(double v0) {
  Spectrum spectrum;
  spectrum.provenance = Provenance::analytic;
  const int count = bound_state_count(v0);
  spectrum.levels.reserve(count);
  for (int n = 1; n <= count; ++n) spectrum.levels.push_back(eigenvalue(v0, n));
  return spectrum;
}

}  // namespace susyd::hulthen
