#include "susyd/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace susyd::specfun {

namespace {

// Lanczos coefficients, g = 7.
constexpr double kLanczos[] = {
    0.99999999999980993,    676.5203681218851,      -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6,  1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // log(2*pi)/2

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  if (x < 0.5) {
    // reflection, keeps the series argument above 0.5
    return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
  }
  const double xm1 = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (xm1 + i);
  const double t = xm1 + 7.5;
  return kHalfLogTwoPi + (xm1 + 0.5) * std::log(t) - t + std::log(series);
}

double hyp2f1_terminating(double a, int n, double c, double z) {
  if (n < 1) throw std::invalid_argument("hyp2f1_terminating: requires n >= 1");
  if (!(c > 0.0)) throw std::invalid_argument("hyp2f1_terminating: requires c > 0");
  const double b = 1.0 - n;
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;  // Kahan compensation
  for (int j = 0; j < n - 1; ++j) {
    term *= (a + j) * (b + j) / ((c + j) * (j + 1)) * z;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double gamma_ratio(int n, double k) {
  if (n < 1) throw std::invalid_argument("gamma_ratio: requires n >= 1");
  if (!(k > 0.0)) throw std::invalid_argument("gamma_ratio: requires k > 0");
  return std::exp(log_gamma(n + 2.0 * k) - log_gamma(n + 1.0) -
                  log_gamma(2.0 * k + 1.0));
}

PolyHypergeom::PolyHypergeom(double a, int m, double c) {
  if (m < 0) throw std::invalid_argument("PolyHypergeom: requires m >= 0");
  if (!(c > 0.0)) throw std::invalid_argument("PolyHypergeom: requires c > 0");
  coeff_.resize(m + 1);
  coeff_[0] = 1.0;
  for (int j = 0; j < m; ++j)
    coeff_[j + 1] = coeff_[j] * (a + j) * (-m + j) / ((c + j) * (j + 1));
}

double PolyHypergeom::operator()(double z) const {
  double acc = 0.0;
  for (int j = degree(); j >= 0; --j) acc = acc * z + coeff_[j];
  return acc;
}

double PolyHypergeom::derivative(double z) const {
  double acc = 0.0;
  for (int j = degree(); j >= 1; --j) acc = acc * z + j * coeff_[j];
  return acc;
}

double PolyHypergeom::second_derivative(double z) const {
  double acc = 0.0;
  for (int j = degree(); j >= 2; --j) acc = acc * z + j * (j - 1) * coeff_[j];
  return acc;
}

}  // namespace susyd::specfun
