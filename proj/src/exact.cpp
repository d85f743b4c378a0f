#include "kb/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kb {

bool has_exact_solution(const InitialCondition& ic) {
  return std::holds_alternative<ConvergingShock>(ic) ||
         std::holds_alternative<RiemannShock>(ic) ||
         std::holds_alternative<RiemannRarefaction>(ic);
}

double exact_solution(const InitialCondition& ic, double x, double t) {
  if (std::holds_alternative<ConvergingShock>(ic)) {
    if (t < 1.0) {
      // Characteristics compress the ramp until it breaks at t = 1.
      if (x <= t) return 1.0;
      if (x >= 1.0) return 0.0;
      return (1.0 - x) / (1.0 - t);
    }
    // Shock between the plateaus, Rankine-Hugoniot speed (1 + 0) / 2.
    return x < 0.5 * (1.0 + t) ? 1.0 : 0.0;
  }
  if (const auto* s = std::get_if<RiemannShock>(&ic)) {
    return x < s->x0 + 0.5 * t ? 1.0 : 0.0;
  }
  if (const auto* r = std::get_if<RiemannRarefaction>(&ic)) {
    if (t <= 0.0) return x < r->x0 ? 0.0 : 1.0;
    if (x <= r->x0) return 0.0;
    if (x >= r->x0 + t) return 1.0;
    return (x - r->x0) / t;
  }
  throw std::invalid_argument("exact_solution: no closed form for " + ic_name(ic));
}

double l1_error(std::span<const double> u, const InitialCondition& ic, double t,
                const Grid& grid) {
  double sum = 0.0;
  for (int i = 0; i < grid.n_cells; ++i) {
    sum += std::abs(u[static_cast<std::size_t>(i)] - exact_solution(ic, grid.center(i), t));
  }
  return sum * grid.dx();
}

ShockMetrics shock_metrics(std::span<const double> u, const Grid& grid, double u_left,
                           double u_right) {
  ShockMetrics m;
  const double delta = u_left - u_right;
  if (u.empty() || std::abs(delta) < 1e-300) return m;

  const double mid = 0.5 * (u_left + u_right);
  const bool falling = delta > 0.0;

  // Last mid-level crossing in the transition direction, interpolated.
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double a = u[i];
    const double b = u[i + 1];
    const bool crosses = falling ? (a >= mid && b < mid) : (a <= mid && b > mid);
    if (crosses && a != b) {
      const double frac = (mid - a) / (b - a);
      m.found = true;
      m.position = grid.center(static_cast<int>(i)) + frac * grid.dx();
    }
  }
  if (!m.found) return m;

  const double hi = std::max(u_left, u_right);
  const double lo = std::min(u_left, u_right);
  const double band = 0.1 * std::abs(delta);
  int width = 0;
  double u_max = u[0];
  double u_min = u[0];
  for (const double v : u) {
    if (v > lo + band && v < hi - band) ++width;
    u_max = std::max(u_max, v);
    u_min = std::min(u_min, v);
  }
  m.width_cells = width;
  m.overshoot = u_max - hi;
  m.undershoot = lo - u_min;
  return m;
}

double least_squares_slope(std::span<const double> t, std::span<const double> x) {
  const std::size_t n = std::min(t.size(), x.size());
  if (n < 2) return 0.0;
  double mt = 0.0, mx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mt += t[i];
    mx += x[i];
  }
  mt /= static_cast<double>(n);
  mx /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (t[i] - mt) * (x[i] - mx);
    den += (t[i] - mt) * (t[i] - mt);
  }
  return den > 0.0 ? num / den : 0.0;
}

}  // namespace kb
