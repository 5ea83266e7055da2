// Shared numerical plumbing: grids, quadrature, finite-difference stencils.
#pragma once

#include <functional>
#include <span>
#include <vector>

namespace susyd {

/// Uniform grid on [x_min, x_max] with `points` nodes (points >= 2).
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int points = 2;

  double step() const { return (x_max - x_min) / (points - 1); }
  double x(int i) const { return x_min + i * step(); }
  std::vector<double> sample() const;

  bool operator==(const Grid&) const = default;
};

/// Function values tabulated on a uniform grid.
struct GridFunction {
  Grid grid;
  std::vector<double> values;
};

/// Sampler bundle for a wavefunction with closed-form derivatives.
/// `second_derivative` may be left empty when a consumer only needs
/// values and slopes.
struct Wavefunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  std::function<double(double)> second_derivative;
};

/// Composite Simpson rule with `intervals` uniform subdivisions.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, int intervals);

/// Composite Simpson rule over tabulated values with spacing `step`.
/// Falls back to a trapezoid on the last interval when the count is odd.
double integrate_simpson(std::span<const double> values, double step);

// O(h^4) centered stencils; valid for 2 <= i <= n-3.
double derivative_5pt(std::span<const double> y, int i, double h);
double second_derivative_5pt(std::span<const double> y, int i, double h);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares straight line through (x_i, y_i).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Number of strict sign changes along a sampled function.
int count_sign_changes(std::span<const double> y);

}  // namespace susyd
