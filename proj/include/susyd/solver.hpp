// Independent numerical oracle: Numerov shooting solver for bound states
// of an arbitrary dimensionless radial potential on (0, inf).
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "susyd/numerics.hpp"

namespace susyd::solver {

/// One radial eigenproblem on a uniform grid. origin_exponent encodes the
/// indicial behavior psi ~ x^s at the left boundary: s = 1 for regular
/// wells, s = 2 for a 2/x^2 repulsive core.
struct RadialProblem {
  std::function<double(double)> potential;
  double origin_exponent = 1.0;
  double x_min = 1e-4;
  double x_max = 30.0;
  int grid_points = 200'000;
};

struct Level {
  int n = 0;  // node count + 1
  double energy = 0.0;
  int nodes = 0;
  double bisection_width = 0.0;
  int iterations = 0;
  GridFunction psi;  // normalized on the grid
};

struct NumericalSpectrum {
  std::vector<Level> levels;
  int grid_points = 0;
  bool window_exhausted = false;     // fewer than max_levels found
  std::vector<std::string> diagnostics;
};

/// Domain size 30/sqrt(-e_hi) clamped to [30, 400]; keeps e^{-kx} below
/// 1e-12 at the boundary for every state in the window.
double recommended_x_max(double e_hi);

/// All bound states with energies in (e_lo, e_hi), found by two-sided
/// Numerov integration with log-derivative matching at the outermost
/// classical turning point. Brackets come from node-count scanning over
/// 200 energy samples; each bracket is refined by bisection on the
/// log-derivative mismatch to width 1e-12.
NumericalSpectrum solve_bound_states(const RadialProblem& problem, double e_lo,
                                     double e_hi, int max_levels);

/// Simpson overlap integral of two grid functions on the same grid.
double wavefunction_overlap(const GridFunction& a, const GridFunction& b);

}  // namespace susyd::solver
