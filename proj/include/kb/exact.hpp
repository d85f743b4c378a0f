#pragma once

#include <span>

#include "kb/initial_condition.hpp"

namespace kb {

// Exact entropy solutions exist for the three named Burgers profiles.
bool has_exact_solution(const InitialCondition& ic);

// Entropy solution u(x, t), t >= 0. Throws std::invalid_argument when no
// closed form is available for the given initial condition.
double exact_solution(const InitialCondition& ic, double x, double t);

// sum_i |u_i - u_exact(x_i, t)| dx over the interior cells.
double l1_error(std::span<const double> u, const InitialCondition& ic, double t,
                const Grid& grid);

struct ShockMetrics {
  bool found = false;      // false when the profile never crosses mid-level
  double position = 0.0;   // linear-interpolated crossing of (uL + uR) / 2
  int width_cells = 0;     // cells strictly inside the 10-90% band
  double overshoot = 0.0;  // max(u) - max(uL, uR)
  double undershoot = 0.0; // min(uL, uR) - min(u)
};

// Transition metrics between far-field plateaus u_left and u_right. Works for
// rising or falling transitions; the position is the last mid-level crossing
// in the transition direction.
ShockMetrics shock_metrics(std::span<const double> u, const Grid& grid, double u_left,
                           double u_right);

// Least-squares slope of x against t; used to fit shock speeds from a series
// of measured positions.
double least_squares_slope(std::span<const double> t, std::span<const double> x);

}  // namespace kb
