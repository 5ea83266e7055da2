// Special-function kernel: terminating Gauss hypergeometric sums and
// log-gamma ratios.
#pragma once

#include <span>
#include <vector>

namespace susyd::specfun {

/// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients).
/// Relative accuracy better than 1e-13 on (0, 50].
double log_gamma(double x);

/// Terminating Gauss series 2F1(a, 1-n, c; z) for integer n >= 1:
/// the sum over j = 0..n-1 of (a)_j (1-n)_j / ((c)_j j!) z^j, accumulated
/// in ascending j with Kahan compensation. Exact polynomial evaluation,
/// no truncation beyond floating point.
double hyp2f1_terminating(double a, int n, double c, double z);

/// Gamma(n+2k) / (Gamma(n+1) Gamma(2k+1)) via log-gamma differences.
double gamma_ratio(int n, double k);

/// Terminating hypergeometric polynomial 2F1(a, -m, c; z) of degree m,
/// held as explicit coefficients for Horner evaluation and closed-form
/// differentiation. Requires c > 0.
class PolyHypergeom {
 public:
  PolyHypergeom(double a, int m, double c);

  double operator()(double z) const;
  /// d/dz of the polynomial.
  double derivative(double z) const;
  /// d^2/dz^2 of the polynomial.
  double second_derivative(double z) const;

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  std::span<const double> coefficients() const { return coeff_; }

 private:
  std::vector<double> coeff_;  // coeff_[j] = (a)_j (-m)_j / ((c)_j j!)
};

}  // namespace susyd::specfun
