#pragma once

#include <array>

namespace kb {

// Uniform cell-centered 1-D grid with one ghost cell on each side.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 200;
  int ghost = 1;

  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int i) const { return x_min + (i + 0.5) * dx(); }
  int total_cells() const { return n_cells + 2 * ghost; }

  void validate() const;  // throws std::invalid_argument
};

// Particle populations of the three-velocity stencil {-lambda, 0, +lambda}.
// The two-velocity scheme reuses this layout with f_zero pinned to zero.
struct PopulationTriple {
  double f_minus = 0.0;
  double f_zero = 0.0;
  double f_plus = 0.0;
};

// m1 = f- + f0 + f+,  m2 = lambda (f+ - f-),  m3 = lambda^2 (f+ + f-).
struct MomentTriple {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

struct MomentMatrix {
  Mat3 m;
  Mat3 inv;
};

// Moment transform for populations ordered (f-, f0, f+).
// Throws std::invalid_argument for non-positive lambda.
MomentMatrix moment_matrix(double lambda);

MomentTriple to_moments(const PopulationTriple& f, double lambda);
PopulationTriple from_moments(const MomentTriple& m, double lambda);

}  // namespace kb
