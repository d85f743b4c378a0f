#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kb/diagnostics.hpp"
#include "kb/equilibrium.hpp"
#include "kb/initial_condition.hpp"
#include "kb/lattice.hpp"

namespace kb {

// Dirichlet ghosts hold the equilibrium of the initial far-field values and
// suit the shock experiments; the periodic mode exists for conservation,
// equivariance and entropy-monotonicity tests where boundary fluxes cancel.
enum class BoundaryMode { dirichlet_equilibrium, periodic };

struct SchemeConfig {
  EquilibriumModel model;
  double lambda = 3.0;  // dx/dt; the time step is always derived as dx/lambda
  double s2 = 1.7;
  double s3 = 1.7;
  Grid grid;
  long steps = 100;
  long snapshot_every = 10;
  BoundaryMode boundary = BoundaryMode::dirichlet_equilibrium;

  double dt() const { return grid.dx() / lambda; }
  void validate() const;  // throws std::invalid_argument
};

struct State {
  Grid grid;
  std::vector<PopulationTriple> f;  // n_cells + 2*ghost entries
  double time = 0.0;
  long step = 0;
  bool diverged = false;
  double divergence_time = 0.0;
  PopulationTriple bc_left{};   // frozen far-field equilibria for Dirichlet ghosts
  PopulationTriple bc_right{};
  double u0_max_abs = 0.0;      // scale for the divergence threshold

  std::span<PopulationTriple> interior() {
    return {f.data() + grid.ghost, static_cast<std::size_t>(grid.n_cells)};
  }
  std::span<const PopulationTriple> interior() const {
    return {f.data() + grid.ghost, static_cast<std::size_t>(grid.n_cells)};
  }
  // Conserved first moment of interior cell i.
  double conserved(int i) const;
  std::vector<double> interior_u() const;
};

// Every cell starts at the equilibrium of the initial profile.
// Throws std::invalid_argument on an ic/model mismatch.
State init_state(const InitialCondition& ic, const SchemeConfig& config);

// Moment-space relaxation, local per cell. The conserved slots are copied,
// never recomputed: m1 (and m2 for acoustics) see no arithmetic.
void collide(State& state, const SchemeConfig& config);

// Refreshes the ghost layer; call between collide and stream.
void apply_boundaries(State& state, const SchemeConfig& config);

// f+ shifts one cell right, f- one cell left, f0 stays.
void stream(State& state);

// collide + boundaries + stream, then the divergence check. No-op on an
// already diverged state.
void step(State& state, const SchemeConfig& config);

// True iff any population is non-finite or max |u| exceeds
// 10 (1 + max |u0|). Crude but model-free.
bool detect_divergence(const State& state, const SchemeConfig& config);

struct Snapshot {
  long step = 0;
  double time = 0.0;
  std::vector<double> x;
  std::vector<double> u;
  std::vector<PopulationTriple> f;
};

Snapshot make_snapshot(const State& state);

struct RunReport {
  SchemeConfig config;
  std::vector<Snapshot> snapshots;
  EntropySeries entropy;
  bool diverged = false;
  double divergence_time = 0.0;
  long steps_completed = 0;
  State final_state;
  double wall_seconds = 0.0;
};

// Full experiment: snapshots at the configured cadence (plus the first and
// final step), an entropy record every step, early stop on divergence.
RunReport run(const SchemeConfig& config, const InitialCondition& ic);

}  // namespace kb
