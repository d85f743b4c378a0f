#pragma once

#include <string>
#include <variant>
#include <vector>

#include "kb/lattice.hpp"

namespace kb {

// Decreasing ramp 1 / (1 - x) / 0 that steepens into a moving shock.
struct ConvergingShock {};
// Step 1 -> 0 at x0; the entropy solution is a shock moving at speed 1/2.
struct RiemannShock { double x0 = 0.2; };
// Step 0 -> 1 at x0; the entropy solution is a self-similar fan.
struct RiemannRarefaction { double x0 = 0.2; };
// Arbitrary profile sampled at the cell centers (size must match the grid).
struct CustomProfile { std::vector<double> u; };
// Acoustic density pulse rho(x) = amplitude exp(-(x-center)^2 / (2 width^2)),
// q = 0.
struct GaussianPulse {
  double center = 0.5;
  double width = 0.05;
  double amplitude = 1.0;
};

using InitialCondition = std::variant<ConvergingShock, RiemannShock, RiemannRarefaction,
                                      CustomProfile, GaussianPulse>;

bool is_acoustic_ic(const InitialCondition& ic);
std::string ic_name(const InitialCondition& ic);

// Scalar profile at interior cell i (Burgers initial conditions only).
double initial_u_at_cell(const InitialCondition& ic, const Grid& grid, int i);
// Time-0 far-field values at the domain ends, used for Dirichlet ghosts.
double boundary_u_left(const InitialCondition& ic, const Grid& grid);
double boundary_u_right(const InitialCondition& ic, const Grid& grid);

struct AcousticPair {
  double rho = 0.0;
  double q = 0.0;
};

AcousticPair initial_acoustic_at_cell(const InitialCondition& ic, const Grid& grid, int i);
AcousticPair boundary_acoustic_left(const InitialCondition& ic, const Grid& grid);
AcousticPair boundary_acoustic_right(const InitialCondition& ic, const Grid& grid);

// Desk-scale default grids that resolve each test problem's features.
Grid default_grid(const InitialCondition& ic);

}  // namespace kb
