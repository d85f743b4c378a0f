#include <cmath>
#include <vector>

#include "doctest.h"
#include "kb/diagnostics.hpp"
#include "kb/solver.hpp"

using namespace kb;

namespace {

InitialCondition smooth_bump(const Grid& grid) {
  CustomProfile p;
  p.u.resize(static_cast<std::size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i) {
    p.u[static_cast<std::size_t>(i)] = 0.5 + 0.4 * std::sin(2.0 * M_PI * grid.center(i));
  }
  return p;
}

}  // namespace

TEST_CASE("total entropy of simple states") {
  std::vector<PopulationTriple> zeros(20);
  const auto h0 = total_entropy(zeros, UpwindD1Q3{}, 2.0, 0.01);
  REQUIRE(h0.has_value());
  CHECK(std::abs(*h0) <= 1e-15);

  // Global equilibrium: total entropy equals (u^2/2) * domain length.
  for (const EquilibriumModel model :
       {EquilibriumModel{CenteredD1Q3{0.5}}, EquilibriumModel{UpwindD1Q3{}},
        EquilibriumModel{CenteredD1Q2{}}}) {
    const double u = 0.8;
    const double lambda = 2.0;
    std::vector<PopulationTriple> cells(50, equilibrium_f(u, model, lambda));
    const double dx = 0.02;  // covers a domain of length 1
    const auto h = total_entropy(cells, model, lambda, dx);
    REQUIRE(h.has_value());
    CHECK(*h == doctest::Approx(0.5 * u * u).epsilon(1e-12));
  }
}

TEST_CASE("total entropy flags out-of-domain states instead of clamping") {
  std::vector<PopulationTriple> cells(10, equilibrium_f(0.5, UpwindD1Q3{}, 2.0));
  cells[4].f_plus = -0.01;  // the upwind plus slot requires f >= 0
  CHECK_FALSE(total_entropy(cells, UpwindD1Q3{}, 2.0, 0.1).has_value());
}

TEST_CASE("monotonicity report") {
  EntropySeries series;
  for (int k = 0; k < 10; ++k) {
    EntropyRecord rec;
    rec.step = k;
    rec.total_H = 1.0 - 0.01 * k;
    series.push_back(rec);
  }
  const MonotonicityReport down = entropy_monotonicity_report(series);
  CHECK(down.monotone);
  CHECK(down.max_increase <= 0.0);

  series[5].total_H = 2.0;
  const MonotonicityReport up = entropy_monotonicity_report(series);
  CHECK_FALSE(up.monotone);
  CHECK(up.max_increase == doctest::Approx(2.0 - 0.96));
}

TEST_CASE("constant equilibrium keeps the entropy series flat") {
  const Grid grid{0.0, 1.0, 50, 1};
  CustomProfile p;
  p.u.assign(50, 0.6);
  SchemeConfig config;
  config.model = CenteredD1Q3{0.5};
  config.lambda = 3.0;
  config.grid = grid;
  config.steps = 20;
  const RunReport report = run(config, InitialCondition{p});
  REQUIRE_FALSE(report.diverged);
  for (const auto& rec : report.entropy) {
    CHECK(rec.entropy_defined);
    CHECK(std::abs(rec.total_H - report.entropy.front().total_H) <= 1e-13);
  }
}

TEST_CASE("BGK projection dissipates entropy on periodic shock runs") {
  for (const EquilibriumModel model :
       {EquilibriumModel{CenteredD1Q3{0.5}}, EquilibriumModel{UpwindD1Q3{}},
        EquilibriumModel{CenteredD1Q2{}}}) {
    SchemeConfig config;
    config.model = model;
    config.lambda = 3.0;
    config.s2 = config.s3 = 1.0;
    config.grid = default_grid(RiemannShock{});
    config.steps = 100;
    config.boundary = BoundaryMode::periodic;
    const RunReport report = run(config, RiemannShock{});
    REQUIRE_FALSE(report.diverged);
    for (const auto& rec : report.entropy) CHECK(rec.entropy_defined);
    CHECK(entropy_monotonicity_report(report.entropy).monotone);
  }
}

TEST_CASE("smooth periodic runs dissipate entropy at unit relaxation") {
  const Grid grid{0.0, 1.0, 200, 1};
  const InitialCondition ic = smooth_bump(grid);
  SchemeConfig config;
  config.model = UpwindD1Q3{};
  config.lambda = 3.0;
  config.s2 = config.s3 = 1.0;
  config.grid = grid;
  config.steps = 150;
  config.boundary = BoundaryMode::periodic;
  const RunReport report = run(config, ic);
  REQUIRE_FALSE(report.diverged);
  CHECK(entropy_monotonicity_report(report.entropy).monotone);
}

TEST_CASE("fully over-relaxed runs stop dissipating entropy") {
  // At s = 2 the collision is a reflection through equilibrium: the run stays
  // bounded but entropy decay essentially vanishes (tiny oscillations either
  // way are expected since the Burgers entropies are not quadratic).
  const InitialCondition ic = ConvergingShock{};
  SchemeConfig config;
  config.model = CenteredD1Q3{0.5};
  config.lambda = 3.0;
  config.s2 = config.s3 = 2.0;
  config.grid = default_grid(ic);
  config.steps = 600;
  const RunReport report = run(config, ic);
  REQUIRE_FALSE(report.diverged);

  double dissipated = 0.0;
  double max_step_change = 0.0;
  const EntropyRecord* prev = nullptr;
  for (const auto& rec : report.entropy) {
    if (!rec.entropy_defined) {
      prev = nullptr;
      continue;
    }
    if (prev != nullptr) {
      dissipated += prev->total_H - rec.total_H;
      max_step_change = std::max(max_step_change, std::abs(rec.total_H - prev->total_H));
    }
    prev = &rec;
  }
  (void)dissipated;
  const double scale = std::abs(report.entropy.front().total_H);
  const MonotonicityReport mono = entropy_monotonicity_report(report.entropy);
  const bool increases_observed = mono.max_increase > 1e-12 * scale;
  const bool near_zero_dissipation = max_step_change <= 1e-3 * scale;
  CHECK((increases_observed || near_zero_dissipation));
}
