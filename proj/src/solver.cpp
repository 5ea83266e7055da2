#include "susyd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace susyd::solver {

namespace {

constexpr int kScanSamples = 200;
constexpr int kMaxBisection = 200;
constexpr double kBisectionTol = 1e-12;
constexpr double kRescaleLimit = 1e100;

struct Workspace {
  std::vector<double> x;
  std::vector<double> v;
  double h = 0.0;
  int n = 0;
  double s = 1.0;          // origin exponent
  double residue = 0.0;    // A in V ~ s(s-1)/x^2 + A/x near the origin
  std::function<double(double)> potential;
};

Workspace tabulate(const RadialProblem& problem) {
  Workspace ws;
  ws.n = problem.grid_points;
  ws.h = (problem.x_max - problem.x_min) / (ws.n - 1);
  ws.s = problem.origin_exponent;
  ws.potential = problem.potential;
  ws.x.resize(ws.n);
  ws.v.resize(ws.n);
  for (int i = 0; i < ws.n; ++i) {
    ws.x[i] = problem.x_min + i * ws.h;
    ws.v[i] = problem.potential(ws.x[i]);
  }
  const double x0 = ws.x[0];
  const double centrifugal = ws.s * (ws.s - 1.0) / (x0 * x0);
  ws.residue = x0 * (ws.v[0] - centrifugal);
  return ws;
}

// Start pair (y_0, y_1) at the first two grid nodes. For 1/x-type wells
// the bare x^s pair is wrong at O(h) in the value ratio; the Frobenius
// form x^s (1 + A x / 2s), integrated across the first interval with
// h/64 substeps, keeps start-up error below the O(h^4) sweep error.
void startup_pair(const Workspace& ws, double energy, double& y0_out,
                  double& y1_out) {
  const double x0 = ws.x[0];
  const double c = ws.residue / (2.0 * ws.s);
  const auto series = [&](double x) {
    return std::pow(x, ws.s) * (1.0 + c * x);
  };
  constexpr int kSubSteps = 64;
  const double hs = ws.h / kSubSteps;
  const auto factor = [&](double x) {
    return hs * hs * (ws.potential(x) - energy) / 12.0;
  };
  double y0 = series(x0);
  double y1 = series(x0 + hs);
  double t0 = factor(x0);
  double t1 = factor(x0 + hs);
  y0_out = y0;
  for (int i = 1; i < kSubSteps; ++i) {
    const double t2 = factor(x0 + (i + 1) * hs);
    const double y2 = (2.0 * y1 * (1.0 + 5.0 * t1) - y0 * (1.0 - t0)) / (1.0 - t2);
    y0 = y1;
    y1 = y2;
    t0 = t1;
    t1 = t2;
  }
  y1_out = y1;
}

// Outermost classical turning point (largest i with V < E), clamped away
// from the boundaries; falls back to the potential minimum.
int matching_index(const Workspace& ws, double energy) {
  int m = -1;
  for (int i = ws.n - 1; i >= 0; --i) {
    if (ws.v[i] < energy) {
      m = i;
      break;
    }
  }
  if (m < 0) {
    m = static_cast<int>(std::min_element(ws.v.begin(), ws.v.end()) -
                         ws.v.begin());
  }
  return std::clamp(m, 4, ws.n - 5);
}

// Numerov step factor t_i = h^2 (V_i - E) / 12 for psi'' = (V - E) psi.
inline double step_factor(const Workspace& ws, int i, double energy) {
  return ws.h * ws.h * (ws.v[i] - energy) / 12.0;
}

// Left sweep across the whole grid; returns the node count. Only the
// running pair is kept, rescaled when it grows past the overflow guard.
int count_nodes(const Workspace& ws, double energy) {
  double y0, y1;
  startup_pair(ws, energy, y0, y1);
  double t0 = step_factor(ws, 0, energy);
  double t1 = step_factor(ws, 1, energy);
  int nodes = 0;
  for (int i = 1; i < ws.n - 1; ++i) {
    const double t2 = step_factor(ws, i + 1, energy);
    const double y2 = (2.0 * y1 * (1.0 + 5.0 * t1) - y0 * (1.0 - t0)) / (1.0 - t2);
    if (y1 * y2 < 0.0) ++nodes;
    y0 = y1;
    y1 = y2;
    t0 = t1;
    t1 = t2;
    if (std::abs(y1) > kRescaleLimit) {
      const double scale = 1.0 / std::abs(y1);
      y0 *= scale;
      y1 *= scale;
    }
  }
  return nodes;
}

// Left sweep storing values up to index `last` (inclusive). The stored
// prefix is rescaled in place when the amplitude grows too large.
void sweep_left(const Workspace& ws, double energy, int last,
                std::vector<double>& y) {
  y.assign(last + 1, 0.0);
  startup_pair(ws, energy, y[0], y[1]);
  double t0 = step_factor(ws, 0, energy);
  double t1 = step_factor(ws, 1, energy);
  for (int i = 1; i < last; ++i) {
    const double t2 = step_factor(ws, i + 1, energy);
    y[i + 1] = (2.0 * y[i] * (1.0 + 5.0 * t1) - y[i - 1] * (1.0 - t0)) / (1.0 - t2);
    t0 = t1;
    t1 = t2;
    if (std::abs(y[i + 1]) > kRescaleLimit) {
      const double scale = 1.0 / std::abs(y[i + 1]);
      for (int j = 0; j <= i + 1; ++j) y[j] *= scale;
    }
  }
}

// Right sweep storing values from index `first` to the end. Decaying
// start: y(x_max) = 0 with a tiny second value sets the scale-free tail.
void sweep_right(const Workspace& ws, double energy, int first,
                 std::vector<double>& y) {
  y.assign(ws.n, 0.0);
  y[ws.n - 1] = 0.0;
  y[ws.n - 2] = 1e-30;
  double t2 = step_factor(ws, ws.n - 1, energy);
  double t1 = step_factor(ws, ws.n - 2, energy);
  for (int i = ws.n - 2; i > first; --i) {
    const double t0 = step_factor(ws, i - 1, energy);
    y[i - 1] = (2.0 * y[i] * (1.0 + 5.0 * t1) - y[i + 1] * (1.0 - t2)) / (1.0 - t0);
    t2 = t1;
    t1 = t0;
    if (std::abs(y[i - 1]) > kRescaleLimit) {
      const double scale = 1.0 / std::abs(y[i - 1]);
      for (int j = i - 1; j < ws.n; ++j) y[j] *= scale;
    }
  }
}

// Log-derivative mismatch at the matching index.
double log_derivative_mismatch(const Workspace& ws, double energy, int m,
                               std::vector<double>& left,
                               std::vector<double>& right) {
  sweep_left(ws, energy, m + 2, left);
  sweep_right(ws, energy, m - 2, right);
  const double dl = derivative_5pt(left, m, ws.h);
  const double dr = derivative_5pt(std::span<const double>(right).subspan(m - 2), 2, ws.h);
  return dl / left[m] - dr / right[m];
}

}  // namespace

double recommended_x_max(double e_hi) {
  if (!(e_hi < 0.0))
    throw std::invalid_argument("recommended_x_max: requires e_hi < 0");
  return std::clamp(30.0 / std::sqrt(-e_hi), 30.0, 400.0);
}

NumericalSpectrum solve_bound_states(const RadialProblem& problem, double e_lo,
                                     double e_hi, int max_levels) {
  if (!problem.potential)
    throw std::invalid_argument("solve_bound_states: missing potential");
  if (!(e_lo < e_hi && e_hi < 0.0))
    throw std::invalid_argument("solve_bound_states: requires e_lo < e_hi < 0");
  if (max_levels < 1)
    throw std::invalid_argument("solve_bound_states: requires max_levels >= 1");
  if (problem.grid_points < 1000)
    throw std::invalid_argument("solve_bound_states: requires >= 1000 grid points");
  if (!(0.0 < problem.x_min && problem.x_min < problem.x_max))
    throw std::invalid_argument("solve_bound_states: requires 0 < x_min < x_max");

  const Workspace ws = tabulate(problem);
  NumericalSpectrum spectrum;
  spectrum.grid_points = problem.grid_points;

  // Phase 1: node-count scan delimits one bracket per eigenvalue.
  std::vector<double> scan_e(kScanSamples);
  std::vector<int> scan_nodes(kScanSamples);
  for (int j = 0; j < kScanSamples; ++j) {
    scan_e[j] = e_lo + (e_hi - e_lo) * j / (kScanSamples - 1);
    scan_nodes[j] = count_nodes(ws, scan_e[j]);
  }

  struct Bracket {
    double lo, hi;
    int index;  // global level index: nodes + 1 of the state inside
  };
  std::vector<Bracket> brackets;
  for (int j = 0; j + 1 < kScanSamples; ++j) {
    if (scan_nodes[j + 1] <= scan_nodes[j]) continue;
    // isolate each level crossed between the two samples
    for (int target = scan_nodes[j] + 1; target <= scan_nodes[j + 1]; ++target) {
      double lo = scan_e[j], hi = scan_e[j + 1];
      int lo_nodes = scan_nodes[j], hi_nodes = scan_nodes[j + 1];
      while (lo_nodes < target - 1 || hi_nodes > target) {
        const double mid = 0.5 * (lo + hi);
        const int mid_nodes = count_nodes(ws, mid);
        if (mid_nodes < target) {
          lo = mid;
          lo_nodes = mid_nodes;
        } else {
          hi = mid;
          hi_nodes = mid_nodes;
        }
        if (hi - lo < kBisectionTol) break;
      }
      brackets.push_back({lo, hi, target});
      if (static_cast<int>(brackets.size()) == max_levels) break;
    }
    if (static_cast<int>(brackets.size()) == max_levels) break;
  }

  // Phase 2: refine each bracket by bisection on the matching mismatch.
  std::vector<double> left, right;
  for (const Bracket& bracket : brackets) {
    double lo = bracket.lo, hi = bracket.hi;
    const int m = matching_index(ws, 0.5 * (lo + hi));
    double d_lo = log_derivative_mismatch(ws, lo, m, left, right);
    int iterations = 0;
    bool mismatch_bisection = std::isfinite(d_lo);
    while (hi - lo > kBisectionTol && iterations < kMaxBisection) {
      const double mid = 0.5 * (lo + hi);
      ++iterations;
      bool take_upper;  // eigenvalue in [mid, hi]?
      const double d_mid =
          mismatch_bisection
              ? log_derivative_mismatch(ws, mid, m, left, right)
              : std::numeric_limits<double>::quiet_NaN();
      if (mismatch_bisection && std::isfinite(d_mid) && d_mid * d_lo < 0.0) {
        take_upper = false;
      } else if (mismatch_bisection && std::isfinite(d_mid)) {
        take_upper = true;
      } else {
        // fall back on node counting when the mismatch is degenerate
        take_upper = count_nodes(ws, mid) < bracket.index;
      }
      if (take_upper) {
        lo = mid;
        if (mismatch_bisection && std::isfinite(d_mid)) d_lo = d_mid;
      } else {
        hi = mid;
      }
    }
    if (iterations >= kMaxBisection && hi - lo > kBisectionTol) {
      spectrum.diagnostics.push_back(
          "bisection stalled for level " + std::to_string(bracket.index) +
          "; width " + std::to_string(hi - lo));
    }

    Level level;
    level.energy = 0.5 * (lo + hi);
    level.bisection_width = hi - lo;
    level.iterations = iterations;

    // Assemble the matched eigenfunction at the converged energy.
    sweep_left(ws, level.energy, m + 2, left);
    sweep_right(ws, level.energy, m - 2, right);
    const double junction = left[m] / right[m];
    GridFunction psi;
    psi.grid = Grid{problem.x_min, problem.x_max, ws.n};
    psi.values.resize(ws.n);
    for (int i = 0; i <= m; ++i) psi.values[i] = left[i];
    for (int i = m + 1; i < ws.n; ++i) psi.values[i] = junction * right[i];
    std::vector<double> density(ws.n);
    for (int i = 0; i < ws.n; ++i) density[i] = psi.values[i] * psi.values[i];
    const double norm = std::sqrt(integrate_simpson(density, ws.h));
    for (double& value : psi.values) value /= norm;
    level.nodes = count_sign_changes(psi.values);
    level.n = bracket.index;
    if (level.nodes != bracket.index - 1)
      spectrum.diagnostics.push_back(
          "node count " + std::to_string(level.nodes) + " != expected " +
          std::to_string(bracket.index - 1) + " at E = " +
          std::to_string(level.energy));
    level.psi = std::move(psi);
    spectrum.levels.push_back(std::move(level));
  }

  spectrum.window_exhausted =
      static_cast<int>(spectrum.levels.size()) < max_levels;
  return spectrum;
}

double wavefunction_overlap(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size())
    throw std::invalid_argument("wavefunction_overlap: mismatched grids");
  std::vector<double> product(a.values.size());
  for (std::size_t i = 0; i < product.size(); ++i)
    product[i] = a.values[i] * b.values[i];
  return integrate_simpson(product, a.grid.step());
}

}  // namespace susyd::solver
