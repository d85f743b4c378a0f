#include "kb/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace kb {

void SchemeConfig::validate() const {
  grid.validate();
  validate_model(model);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("config: lambda must be positive");
  }
  // s = 2 is deliberately allowed; it is the zero-dissipation end of the
  // linearly stable range and one of the experiments lives there.
  if (!(s2 > 0.0) || !(s2 <= 2.0) || !(s3 > 0.0) || !(s3 <= 2.0)) {
    throw std::invalid_argument("config: relaxation rates must lie in (0, 2]");
  }
  if (steps < 0) throw std::invalid_argument("config: steps must be non-negative");
  if (snapshot_every < 1) throw std::invalid_argument("config: snapshot-every must be >= 1");
}

double State::conserved(int i) const {
  const PopulationTriple& c = f[static_cast<std::size_t>(grid.ghost + i)];
  return c.f_minus + c.f_zero + c.f_plus;
}

std::vector<double> State::interior_u() const {
  std::vector<double> u(static_cast<std::size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i) u[static_cast<std::size_t>(i)] = conserved(i);
  return u;
}

State init_state(const InitialCondition& ic, const SchemeConfig& config) {
  config.validate();
  const bool acoustic = is_acoustic(config.model);
  if (acoustic != is_acoustic_ic(ic)) {
    throw std::invalid_argument("init_state: initial condition '" + ic_name(ic) +
                                "' does not match model '" + model_name(config.model) + "'");
  }

  State st;
  st.grid = config.grid;
  st.f.assign(static_cast<std::size_t>(st.grid.total_cells()), PopulationTriple{});

  if (acoustic) {
    const double c0 = std::get<AcousticD1Q3>(config.model).c0;
    for (int i = 0; i < st.grid.n_cells; ++i) {
      const AcousticPair w = initial_acoustic_at_cell(ic, st.grid, i);
      st.f[static_cast<std::size_t>(st.grid.ghost + i)] =
          acoustic_equilibrium_f(w.rho, w.q, c0, config.lambda);
      st.u0_max_abs = std::max(st.u0_max_abs, std::abs(w.rho));
    }
    const AcousticPair left = boundary_acoustic_left(ic, st.grid);
    const AcousticPair right = boundary_acoustic_right(ic, st.grid);
    st.bc_left = acoustic_equilibrium_f(left.rho, left.q, c0, config.lambda);
    st.bc_right = acoustic_equilibrium_f(right.rho, right.q, c0, config.lambda);
  } else {
    for (int i = 0; i < st.grid.n_cells; ++i) {
      const double u = initial_u_at_cell(ic, st.grid, i);
      st.f[static_cast<std::size_t>(st.grid.ghost + i)] =
          equilibrium_f(u, config.model, config.lambda);
      st.u0_max_abs = std::max(st.u0_max_abs, std::abs(u));
    }
    st.bc_left = equilibrium_f(boundary_u_left(ic, st.grid), config.model, config.lambda);
    st.bc_right = equilibrium_f(boundary_u_right(ic, st.grid), config.model, config.lambda);
  }

  apply_boundaries(st, config);
  return st;
}

void collide(State& state, const SchemeConfig& config) {
  const double lam = config.lambda;
  const double s2 = config.s2;
  const double s3 = config.s3;
  const int ghost = state.grid.ghost;
  const int n = state.grid.n_cells;
  PopulationTriple* cells = state.f.data() + ghost;

  if (const auto* d1q2 = std::get_if<CenteredD1Q2>(&config.model)) {
    (void)d1q2;
    // Two free populations: relax the flux moment only, the zero slot stays
    // pinned at zero (s3 has nothing to act on).
    for (int i = 0; i < n; ++i) {
      const MomentTriple m = to_moments(cells[i], lam);
      const double m2 = m.m2 + s2 * (0.5 * m.m1 * m.m1 - m.m2);
      const double half_u = 0.5 * m.m1;
      const double half_diff = m2 / (2.0 * lam);
      cells[i] = {half_u - half_diff, 0.0, half_u + half_diff};
    }
    return;
  }

  if (const auto* ac = std::get_if<AcousticD1Q3>(&config.model)) {
    const double c0sq = ac->c0 * ac->c0;
    // rho and q are both conserved; only the energy-like moment relaxes.
    for (int i = 0; i < n; ++i) {
      const MomentTriple m = to_moments(cells[i], lam);
      if (s3 == 1.0) {
        cells[i] = acoustic_equilibrium_f(m.m1, m.m2, ac->c0, lam);
        continue;
      }
      const MomentTriple relaxed{m.m1, m.m2, m.m3 + s3 * (c0sq * m.m1 - m.m3)};
      cells[i] = from_moments(relaxed, lam);
    }
    return;
  }

  if (s2 == 1.0 && s3 == 1.0) {
    // Exact BGK projection: f* is the equilibrium of the cell's own u. Going
    // through the moment reconstruction instead would leave ulp-level jitter
    // on populations that sit exactly on their entropy-domain edge.
    for (int i = 0; i < n; ++i) {
      const MomentTriple m = to_moments(cells[i], lam);
      cells[i] = equilibrium_f(m.m1, config.model, lam);
    }
    return;
  }

  for (int i = 0; i < n; ++i) {
    const MomentTriple m = to_moments(cells[i], lam);
    const MomentTriple eq = equilibrium_moments(m.m1, config.model, lam);
    const MomentTriple relaxed{m.m1, m.m2 + s2 * (eq.m2 - m.m2), m.m3 + s3 * (eq.m3 - m.m3)};
    cells[i] = from_moments(relaxed, lam);
  }
}

void apply_boundaries(State& state, const SchemeConfig& config) {
  const int ghost = state.grid.ghost;
  const int n = state.grid.n_cells;
  if (config.boundary == BoundaryMode::periodic) {
    for (int g = 0; g < ghost; ++g) {
      state.f[static_cast<std::size_t>(g)] = state.f[static_cast<std::size_t>(n + g)];
      state.f[static_cast<std::size_t>(ghost + n + g)] =
          state.f[static_cast<std::size_t>(ghost + g)];
    }
    return;
  }
  for (int g = 0; g < ghost; ++g) {
    state.f[static_cast<std::size_t>(g)] = state.bc_left;
    state.f[static_cast<std::size_t>(ghost + n + g)] = state.bc_right;
  }
}

void stream(State& state) {
  auto& f = state.f;
  const int last = state.grid.total_cells() - 1;
  for (int i = last; i >= 1; --i) {
    f[static_cast<std::size_t>(i)].f_plus = f[static_cast<std::size_t>(i - 1)].f_plus;
  }
  for (int i = 0; i < last; ++i) {
    f[static_cast<std::size_t>(i)].f_minus = f[static_cast<std::size_t>(i + 1)].f_minus;
  }
}

bool detect_divergence(const State& state, const SchemeConfig& config) {
  (void)config;
  const double threshold = 10.0 * (1.0 + state.u0_max_abs);
  for (int i = 0; i < state.grid.n_cells; ++i) {
    const PopulationTriple& c = state.f[static_cast<std::size_t>(state.grid.ghost + i)];
    if (!std::isfinite(c.f_minus) || !std::isfinite(c.f_zero) || !std::isfinite(c.f_plus)) {
      return true;
    }
    if (std::abs(c.f_minus + c.f_zero + c.f_plus) > threshold) return true;
  }
  return false;
}

void step(State& state, const SchemeConfig& config) {
  if (state.diverged) return;
  collide(state, config);
  apply_boundaries(state, config);
  stream(state);
  state.step += 1;
  state.time = static_cast<double>(state.step) * config.dt();
  if (detect_divergence(state, config)) {
    state.diverged = true;
    state.divergence_time = state.time;
  }
}

Snapshot make_snapshot(const State& state) {
  Snapshot snap;
  snap.step = state.step;
  snap.time = state.time;
  const int n = state.grid.n_cells;
  snap.x.resize(static_cast<std::size_t>(n));
  snap.u.resize(static_cast<std::size_t>(n));
  snap.f.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    snap.x[static_cast<std::size_t>(i)] = state.grid.center(i);
    snap.u[static_cast<std::size_t>(i)] = state.conserved(i);
    snap.f[static_cast<std::size_t>(i)] = state.f[static_cast<std::size_t>(state.grid.ghost + i)];
  }
  return snap;
}

namespace {

EntropyRecord record_state(const State& state, const SchemeConfig& config) {
  EntropyRecord rec;
  rec.step = state.step;
  rec.time = state.time;
  double mass = 0.0;
  double max_abs = 0.0;
  for (int i = 0; i < state.grid.n_cells; ++i) {
    const double u = state.conserved(i);
    mass += u;
    max_abs = std::max(max_abs, std::abs(u));
  }
  rec.total_mass = mass * state.grid.dx();
  rec.max_abs_u = max_abs;
  const ConvexityDomain domain = convexity_bound(config.model, config.lambda);
  rec.in_convexity_domain = is_acoustic(config.model) ? domain.valid : domain.contains(max_abs);
  const auto h = total_entropy(state.interior(), config.model, config.lambda, state.grid.dx());
  rec.entropy_defined = h.has_value();
  rec.total_H = h.value_or(std::nan(""));
  return rec;
}

}  // namespace

RunReport run(const SchemeConfig& config, const InitialCondition& ic) {
  const auto t0 = std::chrono::steady_clock::now();
  State st = init_state(ic, config);

  RunReport report;
  report.config = config;
  report.entropy.push_back(record_state(st, config));
  report.snapshots.push_back(make_snapshot(st));

  for (long k = 1; k <= config.steps; ++k) {
    step(st, config);
    report.entropy.push_back(record_state(st, config));
    if (k % config.snapshot_every == 0 || k == config.steps || st.diverged) {
      report.snapshots.push_back(make_snapshot(st));
    }
    if (st.diverged) break;
  }

  report.diverged = st.diverged;
  report.divergence_time = st.divergence_time;
  report.steps_completed = st.step;
  report.final_state = std::move(st);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace kb
