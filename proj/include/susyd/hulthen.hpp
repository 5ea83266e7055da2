// Analytic Hulthén problem in dimensionless form: potential values,
// bound-state count, spectrum and normalized eigenfunctions.
#pragma once

#include <vector>

#include "susyd/numerics.hpp"
#include "susyd/specfun.hpp"

namespace susyd::hulthen {

/// Attractive Hulthén well -V0/(e^x - 1), x = r/alpha dimensionless.
class HulthenPotential {
 public:
  explicit HulthenPotential(double v0);

  double strength() const { return v0_; }

  /// Potential value for x > 0. Below x = 1e-4 a three-term Laurent
  /// expansion -V0 (1/x - 1/2 + x/12) replaces the direct formula.
  double value(double x) const;

 private:
  double v0_;
};

/// Largest n with V0 > n^2 (strict), i.e. the number of bound S states.
int bound_state_count(double v0);

struct EnergyLevel {
  int n = 0;
  double k = 0.0;       // E = -k^2
  double energy = 0.0;  // dimensionless, negative
};

/// E_n = -((V0 - n^2) / (2n))^2; requires V0 > n^2.
EnergyLevel eigenvalue(double v0, int n);

/// Normalized bound state psi_n(x) = C e^{-kx} (1 - e^{-x}) P(e^{-x})
/// with P the terminating hypergeometric polynomial. The constant C is
/// fixed so that the integral of psi^2 over (0, inf) is 1, by composite
/// Simpson on [0, max(30, 30/k)] with 2e5 intervals.
class BoundState {
 public:
  BoundState(double v0, int n);

  int n() const { return n_; }
  double k() const { return k_; }
  double energy() const { return energy_; }

  double psi(double x) const;
  double psi_prime(double x) const;
  double psi_second(double x) const;

  /// Quadrature-fixed normalization constant (authoritative).
  double norm_constant() const { return norm_; }
  /// [2k(n+k)(n+2k)]^{1/2} Gamma(n+2k) / (Gamma(n+1) Gamma(2k+1)).
  double closed_form_constant() const;

  Wavefunction wavefunction() const;

 private:
  int n_;
  double k_;
  double energy_;
  double norm_;
  specfun::PolyHypergeom poly_;  // 2F1(2k+1+n, 1-n, 2k+1; z), z = e^{-x}
};

/// Convenience factory matching the spectrum entry n.
BoundState eigenfunction(double v0, int n);

enum class Provenance { analytic, numerical_oracle };

struct Spectrum {
  Provenance provenance = Provenance::analytic;
  std::vector<EnergyLevel> levels;
};

/// All bound levels of the well, ordered by n (E strictly increasing).
Spectrum analytic_spectrum(double v0);

}  // namespace susyd::hulthen
