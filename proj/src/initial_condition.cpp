#include "kb/initial_condition.hpp"

#include <cmath>
#include <stdexcept>

namespace kb {

namespace {

double ramp_profile(double x) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return 1.0 - x;
}

// Analytic profile at position x; CustomProfile has no analytic form and is
// handled by the per-cell / boundary accessors.
double burgers_profile(const InitialCondition& ic, double x) {
  if (std::holds_alternative<ConvergingShock>(ic)) return ramp_profile(x);
  if (const auto* s = std::get_if<RiemannShock>(&ic)) return x < s->x0 ? 1.0 : 0.0;
  if (const auto* r = std::get_if<RiemannRarefaction>(&ic)) return x < r->x0 ? 0.0 : 1.0;
  throw std::invalid_argument("initial condition has no scalar profile");
}

}  // namespace

bool is_acoustic_ic(const InitialCondition& ic) {
  return std::holds_alternative<GaussianPulse>(ic);
}

std::string ic_name(const InitialCondition& ic) {
  struct Visitor {
    std::string operator()(const ConvergingShock&) const { return "converging"; }
    std::string operator()(const RiemannShock&) const { return "riemann-shock"; }
    std::string operator()(const RiemannRarefaction&) const { return "riemann-rarefaction"; }
    std::string operator()(const CustomProfile&) const { return "custom"; }
    std::string operator()(const GaussianPulse&) const { return "gaussian-pulse"; }
  };
  return std::visit(Visitor{}, ic);
}

double initial_u_at_cell(const InitialCondition& ic, const Grid& grid, int i) {
  if (const auto* c = std::get_if<CustomProfile>(&ic)) {
    if (c->u.size() != static_cast<std::size_t>(grid.n_cells)) {
      throw std::invalid_argument("custom profile: sample count must equal n_cells");
    }
    return c->u[static_cast<std::size_t>(i)];
  }
  return burgers_profile(ic, grid.center(i));
}

double boundary_u_left(const InitialCondition& ic, const Grid& grid) {
  if (const auto* c = std::get_if<CustomProfile>(&ic)) {
    if (c->u.empty()) throw std::invalid_argument("custom profile: empty");
    return c->u.front();
  }
  return burgers_profile(ic, grid.x_min);
}

double boundary_u_right(const InitialCondition& ic, const Grid& grid) {
  if (const auto* c = std::get_if<CustomProfile>(&ic)) {
    if (c->u.empty()) throw std::invalid_argument("custom profile: empty");
    return c->u.back();
  }
  return burgers_profile(ic, grid.x_max);
}

namespace {

AcousticPair gaussian_at(const GaussianPulse& g, double x) {
  const double z = (x - g.center) / g.width;
  return {g.amplitude * std::exp(-0.5 * z * z), 0.0};
}

}  // namespace

AcousticPair initial_acoustic_at_cell(const InitialCondition& ic, const Grid& grid, int i) {
  if (const auto* g = std::get_if<GaussianPulse>(&ic)) return gaussian_at(*g, grid.center(i));
  throw std::invalid_argument("initial condition is not acoustic");
}

AcousticPair boundary_acoustic_left(const InitialCondition& ic, const Grid& grid) {
  if (const auto* g = std::get_if<GaussianPulse>(&ic)) return gaussian_at(*g, grid.x_min);
  throw std::invalid_argument("initial condition is not acoustic");
}

AcousticPair boundary_acoustic_right(const InitialCondition& ic, const Grid& grid) {
  if (const auto* g = std::get_if<GaussianPulse>(&ic)) return gaussian_at(*g, grid.x_max);
  throw std::invalid_argument("initial condition is not acoustic");
}

Grid default_grid(const InitialCondition& ic) {
  if (std::holds_alternative<ConvergingShock>(ic)) {
    return {-0.5, 2.5, 300, 1};
  }
  return {0.0, 1.0, 200, 1};
}

}  // namespace kb
