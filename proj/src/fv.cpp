#include "kb/fv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kb {

FluxSplit flux_split(double u, const EquilibriumModel& model, double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    const double quarter_u2 = 0.25 * u * u;
    const double drift = 0.5 * c->alpha * lambda * u;
    return {quarter_u2 + drift, quarter_u2 - drift};
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    if (u >= 0.0) return {0.5 * u * u, 0.0};
    return {0.0, 0.5 * u * u};
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    const double quarter_u2 = 0.25 * u * u;
    const double drift = 0.5 * lambda * u;
    return {quarter_u2 + drift, quarter_u2 - drift};
  }
  throw std::invalid_argument("flux_split: defined for the Burgers models only");
}

double engquist_osher_flux(double u_left, double u_right) {
  const double a = std::max(u_left, 0.0);
  const double b = std::min(u_right, 0.0);
  return 0.5 * a * a + 0.5 * b * b;
}

double interface_flux_psi(const State& post_collision, int interface, double lambda) {
  const int g = post_collision.grid.ghost;
  const auto& f = post_collision.f;
  const std::size_t left = static_cast<std::size_t>(g + interface - 1);
  const std::size_t right = static_cast<std::size_t>(g + interface);
  return lambda * (f[left].f_plus - f[right].f_minus);
}

std::vector<double> interface_fluxes(const State& post_collision, double lambda) {
  const int n = post_collision.grid.n_cells;
  std::vector<double> psi(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    psi[static_cast<std::size_t>(k)] = interface_flux_psi(post_collision, k, lambda);
  }
  return psi;
}

void fv_step(std::vector<double>& u, const NumericalFlux& flux, double u_far_left,
             double u_far_right, double dx, double dt) {
  const std::size_t n = u.size();
  if (n == 0) return;
  const double r = dt / dx;
  std::vector<double> psi(n + 1);
  psi[0] = flux(u_far_left, u[0]);
  for (std::size_t k = 1; k < n; ++k) psi[k] = flux(u[k - 1], u[k]);
  psi[n] = flux(u[n - 1], u_far_right);
  for (std::size_t i = 0; i < n; ++i) u[i] -= r * (psi[i + 1] - psi[i]);
}

EquivalenceResult equivalence_check(const SchemeConfig& config, const InitialCondition& ic,
                                    long n_steps) {
  const EquilibriumModel model = config.model;
  const double lambda = config.lambda;
  return equivalence_check(config, ic, n_steps, [model, lambda](double uL, double uR) {
    return flux_split(uL, model, lambda).plus + flux_split(uR, model, lambda).minus;
  });
}

EquivalenceResult equivalence_check(const SchemeConfig& config, const InitialCondition& ic,
                                    long n_steps, const NumericalFlux& reference_flux) {
  if (is_acoustic(config.model)) {
    throw std::invalid_argument("equivalence_check: Burgers models only");
  }
  State lbm = init_state(ic, config);

  std::vector<double> u_fv(static_cast<std::size_t>(config.grid.n_cells));
  for (int i = 0; i < config.grid.n_cells; ++i) {
    u_fv[static_cast<std::size_t>(i)] = initial_u_at_cell(ic, config.grid, i);
  }
  const double u_left = boundary_u_left(ic, config.grid);
  const double u_right = boundary_u_right(ic, config.grid);
  const double dx = config.grid.dx();
  const double dt = config.dt();

  EquivalenceResult result;
  result.steps = n_steps;
  for (long k = 0; k < n_steps; ++k) {
    step(lbm, config);
    fv_step(u_fv, reference_flux, u_left, u_right, dx, dt);
    if (lbm.diverged) break;
    for (int i = 0; i < config.grid.n_cells; ++i) {
      const double dev = std::abs(lbm.conserved(i) - u_fv[static_cast<std::size_t>(i)]);
      result.max_deviation = std::max(result.max_deviation, dev);
    }
  }
  return result;
}

}  // namespace kb
