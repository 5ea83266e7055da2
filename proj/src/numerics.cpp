#include "susyd/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace susyd {

std::vector<double> Grid::sample() const {
  std::vector<double> xs(points);
  const double h = step();
  for (int i = 0; i < points; ++i) xs[i] = x_min + i * h;
  return xs;
}

double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b, int intervals) {
  if (intervals < 2) throw std::invalid_argument("simpson: need >= 2 intervals");
  if (intervals % 2 != 0) ++intervals;
  const double h = (b - a) / intervals;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < intervals; i += 2) odd += f(a + i * h);
  for (int i = 2; i < intervals; i += 2) even += f(a + i * h);
  return (h / 3.0) * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

double integrate_simpson(std::span<const double> values, double step) {
  const int n = static_cast<int>(values.size());
  if (n < 3) throw std::invalid_argument("simpson: need >= 3 samples");
  int last = n - 1;          // index closing the Simpson range
  const bool odd_intervals = (last % 2 != 0);
  if (odd_intervals) --last;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < last; i += 2) odd += values[i];
  for (int i = 2; i < last; i += 2) even += values[i];
  double total = (step / 3.0) * (values[0] + values[last] + 4.0 * odd + 2.0 * even);
  if (odd_intervals)  // trapezoid on the trailing interval
    total += 0.5 * step * (values[n - 2] + values[n - 1]);
  return total;
}

double derivative_5pt(std::span<const double> y, int i, double h) {
  return (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
}

double second_derivative_5pt(std::span<const double> y, int i, double h) {
  return (-y[i - 2] + 16.0 * y[i - 1] - 30.0 * y[i] + 16.0 * y[i + 1] -
          y[i + 2]) /
         (12.0 * h * h);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_line: need matching samples, >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

int count_sign_changes(std::span<const double> y) {
  int changes = 0;
  double prev = 0.0;
  for (double v : y) {
    if (v == 0.0) continue;
    if (prev != 0.0 && v * prev < 0.0) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace susyd
