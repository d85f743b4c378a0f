#include "kb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "kb/entropy.hpp"
#include "kb/fv.hpp"
#include "kb/legendre.hpp"
#include "kb/solver.hpp"

namespace kb {

namespace {

struct NamedModel {
  std::string label;
  EquilibriumModel model;
  double lambda;
};

std::vector<NamedModel> burgers_test_models() {
  return {
      {"centered-d1q3-a0.25", CenteredD1Q3{0.25}, 2.0},
      {"centered-d1q3-a0.5", CenteredD1Q3{0.5}, 3.0},
      {"centered-d1q3-a0.75", CenteredD1Q3{0.75}, 1.5},
      {"upwind-d1q3", UpwindD1Q3{}, 2.0},
      {"centered-d1q2", CenteredD1Q2{}, 1.5},
  };
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

PropertyResult make_result(std::string suite, std::string name, bool pass, std::string detail) {
  return {std::move(suite), std::move(name), pass, pass ? "" : std::move(detail)};
}

// --- dual identity suite -----------------------------------------------

PropertyResult dual_defining_identities(const NamedModel& nm, double perturb) {
  const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
  double worst_sum = 0.0;
  double worst_flux = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double phi = -phi_max + 2.0 * phi_max * k / 199.0;
    DualParts p = dual_entropy_parts(phi, nm.model, nm.lambda);
    p.plus += perturb;
    worst_sum = std::max(worst_sum, std::abs(p.sum() - 0.5 * phi * phi));
    worst_flux = std::max(worst_flux,
                          std::abs(nm.lambda * (p.plus - p.minus) - phi * phi * phi / 6.0));
  }
  const bool pass = worst_sum <= 1e-12 && worst_flux <= 1e-12;
  return make_result("dual-identity", nm.label + "/defining-identities", pass,
                     "sum residual " + fmt(worst_sum) + ", flux residual " + fmt(worst_flux));
}

PropertyResult dual_derivative_is_equilibrium(const NamedModel& nm) {
  const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
  const double eps = 1e-6;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double phi = -0.95 * phi_max + 1.9 * phi_max * k / 99.0;
    const DualParts hi = dual_entropy_parts(phi + eps, nm.model, nm.lambda);
    const DualParts lo = dual_entropy_parts(phi - eps, nm.model, nm.lambda);
    const PopulationTriple eq = equilibrium_f(phi, nm.model, nm.lambda);
    worst = std::max(worst, std::abs((hi.minus - lo.minus) / (2.0 * eps) - eq.f_minus));
    worst = std::max(worst, std::abs((hi.zero - lo.zero) / (2.0 * eps) - eq.f_zero));
    worst = std::max(worst, std::abs((hi.plus - lo.plus) / (2.0 * eps) - eq.f_plus));
  }
  return make_result("dual-identity", nm.label + "/derivative-matches-equilibrium",
                     worst <= 1e-6, "max derivative mismatch " + fmt(worst));
}

double second_difference(const NamedModel& nm, double phi, double eps, int part) {
  const DualParts hi = dual_entropy_parts(phi + eps, nm.model, nm.lambda);
  const DualParts mid = dual_entropy_parts(phi, nm.model, nm.lambda);
  const DualParts lo = dual_entropy_parts(phi - eps, nm.model, nm.lambda);
  const auto pick = [part](const DualParts& p) {
    return part == 0 ? p.minus : (part == 1 ? p.zero : p.plus);
  };
  return (pick(hi) - 2.0 * pick(mid) + pick(lo)) / (eps * eps);
}

PropertyResult dual_convexity_inside(const NamedModel& nm) {
  const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
  const double eps = 5e-3;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double phi = (-phi_max + eps) + (2.0 * (phi_max - eps)) * k / 99.0;
    for (int part = 0; part < 3; ++part) {
      worst = std::min(worst, second_difference(nm, phi, eps, part));
    }
  }
  return make_result("dual-identity", nm.label + "/convex-inside-domain", worst >= -1e-10,
                     "min second difference " + fmt(worst));
}

PropertyResult dual_convexity_sharp(const NamedModel& nm) {
  // Some part must lose convexity just outside |phi| <= phi_max.
  const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
  const double eps = 5e-3;
  double most_negative = 0.0;
  for (const double phi : {-1.2 * phi_max, 1.2 * phi_max}) {
    for (int part = 0; part < 3; ++part) {
      most_negative = std::min(most_negative, second_difference(nm, phi, eps, part));
    }
  }
  return make_result("dual-identity", nm.label + "/convexity-lost-outside",
                     most_negative < -1e-10,
                     "second differences stay >= " + fmt(most_negative) + " outside the domain");
}

PropertyResult acoustic_dual_identities(double c0, double lambda, double perturb) {
  const AcousticD1Q3 model{c0};
  const EquilibriumModel m = model;
  double worst_eta = 0.0;
  double worst_zeta = 0.0;
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      const double rho = -1.0 + 2.0 * i / 14.0;
      const double q = -1.0 + 2.0 * j / 14.0;
      const double y_plus = rho + lambda * q / (c0 * c0);
      const double y_minus = rho - lambda * q / (c0 * c0);
      const double h_plus = dual_part(y_plus, Slot::plus, m, lambda) + perturb;
      const double h_zero = dual_part(rho, Slot::zero, m, lambda);
      const double h_minus = dual_part(y_minus, Slot::minus, m, lambda);
      const double eta_star = 0.5 * rho * rho + 0.5 * q * q / (c0 * c0);
      const double zeta_star = rho * q;
      worst_eta = std::max(worst_eta, std::abs(h_plus + h_zero + h_minus - eta_star));
      worst_zeta = std::max(worst_zeta, std::abs(lambda * (h_plus - h_minus) - zeta_star));
    }
  }
  const bool pass = worst_eta <= 1e-12 && worst_zeta <= 1e-12;
  return make_result("dual-identity", "acoustic-d1q3/defining-identities", pass,
                     "eta residual " + fmt(worst_eta) + ", zeta residual " + fmt(worst_zeta));
}

// --- Legendre oracle suite ----------------------------------------------

struct SlotInterval {
  double lo;
  double hi;
};

SlotInterval oracle_interval(Slot slot, const EquilibriumModel& model, double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    const double edge = 0.25 * c->alpha * c->alpha * lambda;
    switch (slot) {
      case Slot::plus: return {-edge, 4.0 * edge};
      case Slot::zero: return {-lambda, lambda};
      case Slot::minus: return {-4.0 * edge, edge};
    }
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    switch (slot) {
      case Slot::plus: return {0.0, lambda};
      case Slot::zero: return {-0.5 * lambda, 0.5 * lambda};
      case Slot::minus: return {-lambda, 0.0};
    }
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    const double edge = 0.25 * lambda;
    switch (slot) {
      case Slot::plus: return {-edge, 4.0 * edge};
      case Slot::minus: return {-4.0 * edge, edge};
      case Slot::zero: break;
    }
  }
  const auto& a = std::get<AcousticD1Q3>(model);
  const double y_max = 1.0 + lambda / (a.c0 * a.c0);
  if (slot == Slot::zero) return {-1.5, 1.5};
  const double f_max = 0.5 * a.c0 * a.c0 / (lambda * lambda) * y_max;
  return {-1.5 * f_max, 1.5 * f_max};
}

PropertyResult oracle_recovers_dual(const std::string& label, const EquilibriumModel& model,
                                    double lambda, double y_lo, double y_hi) {
  double worst = 0.0;
  bool bracketed = true;
  for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
    if (micro_entropy_domain(slot, model, lambda).empty) continue;
    const SlotInterval interval = oracle_interval(slot, model, lambda);
    for (int k = 0; k < 100; ++k) {
      const double y = y_lo + (y_hi - y_lo) * k / 99.0;
      const auto h = [&](double f) { return micro_entropy(f, slot, model, lambda); };
      const ConjugateResult numeric = legendre_conjugate(h, y, interval.lo, interval.hi);
      bracketed = bracketed && numeric.bracketed;
      worst = std::max(worst, std::abs(numeric.value - dual_part(y, slot, model, lambda)));
    }
  }
  return make_result("legendre-oracle", label + "/conjugate-of-h-recovers-h-star",
                     worst <= 1e-6 && bracketed,
                     "max |numeric - closed form| " + fmt(worst) +
                         (bracketed ? "" : ", unbracketed maximum"));
}

PropertyResult oracle_involution(const std::string& label, const EquilibriumModel& model,
                                 double lambda, double y_lo, double y_hi) {
  // The reverse direction: conjugating h_j* over the convexity domain must
  // give back h_j at equilibrium-reachable points.
  double worst = 0.0;
  for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
    if (micro_entropy_domain(slot, model, lambda).empty) continue;
    for (int k = 0; k < 100; ++k) {
      const double phi = y_lo + (y_hi - y_lo) * k / 99.0;
      double f = 0.0;
      if (is_acoustic(model)) {
        const auto& a = std::get<AcousticD1Q3>(model);
        const double r = a.c0 * a.c0 / (lambda * lambda);
        f = slot == Slot::zero ? (1.0 - r) * phi : 0.5 * r * phi;
      } else {
        const PopulationTriple eq = equilibrium_f(phi, model, lambda);
        f = slot == Slot::minus ? eq.f_minus : (slot == Slot::zero ? eq.f_zero : eq.f_plus);
      }
      const auto h_star = [&](double y) -> std::optional<double> {
        return dual_part(y, slot, model, lambda);
      };
      const ConjugateResult numeric = legendre_conjugate(h_star, f, y_lo, y_hi);
      const auto direct = micro_entropy(f, slot, model, lambda);
      if (!direct) continue;
      worst = std::max(worst, std::abs(numeric.value - *direct));
    }
  }
  return make_result("legendre-oracle", label + "/conjugate-of-h-star-recovers-h",
                     worst <= 1e-6, "max |numeric - closed form| " + fmt(worst));
}

// --- finite volume equivalence suite -------------------------------------

SchemeConfig riemann_config(const EquilibriumModel& model, double lambda, double s) {
  SchemeConfig config;
  config.model = model;
  config.lambda = lambda;
  config.s2 = s;
  config.s3 = s;
  config.grid = default_grid(RiemannShock{});
  return config;
}

PropertyResult equivalence_at_unit_relaxation(const std::string& label,
                                              const EquilibriumModel& model, double lambda) {
  const EquivalenceResult r = equivalence_check(riemann_config(model, lambda, 1.0),
                                                RiemannShock{}, 50);
  return make_result("fv-equivalence", label + "/unit-relaxation-matches-fv",
                     r.max_deviation <= 1e-13, "max deviation " + fmt(r.max_deviation));
}

PropertyResult upwind_matches_engquist_osher() {
  const EquivalenceResult r =
      equivalence_check(riemann_config(UpwindD1Q3{}, 3.0, 1.0), RiemannShock{}, 50,
                        [](double uL, double uR) { return engquist_osher_flux(uL, uR); });
  return make_result("fv-equivalence", "upwind-d1q3/matches-engquist-osher",
                     r.max_deviation <= 1e-13, "max deviation " + fmt(r.max_deviation));
}

PropertyResult over_relaxation_breaks_equivalence() {
  // Documents that away from s = 1 the scheme is not a flux-form FV method.
  const EquivalenceResult r =
      equivalence_check(riemann_config(UpwindD1Q3{}, 3.0, 1.7), RiemannShock{}, 50);
  return make_result("fv-equivalence", "upwind-d1q3/s1.7-deviates-from-fv",
                     r.max_deviation > 1e-6, "deviation only " + fmt(r.max_deviation));
}

PropertyResult split_sums_to_flux(const NamedModel& nm) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double u = -5.0 + 10.0 * k / 199.0;
    const FluxSplit s = flux_split(u, nm.model, nm.lambda);
    worst = std::max(worst,
                     std::abs(s.plus + s.minus - 0.5 * u * u) / std::max(1.0, 0.5 * u * u));
  }
  return make_result("fv-equivalence", nm.label + "/split-sums-to-burgers-flux",
                     worst <= 1e-15, "relative residual " + fmt(worst));
}

PropertyResult split_is_monotone(const NamedModel& nm) {
  const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
  double worst = 0.0;
  double prev_plus = 0.0;
  double prev_minus = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double u = -phi_max + 2.0 * phi_max * k / 399.0;
    const FluxSplit s = flux_split(u, nm.model, nm.lambda);
    if (k > 0) {
      worst = std::min(worst, s.plus - prev_plus);
      worst = std::min(worst, prev_minus - s.minus);
    }
    prev_plus = s.plus;
    prev_minus = s.minus;
  }
  return make_result("fv-equivalence", nm.label + "/split-is-monotone", worst >= -1e-12,
                     "worst monotonicity defect " + fmt(worst));
}

// --- H-theorem suite ------------------------------------------------------

InitialCondition smooth_profile(const Grid& grid) {
  CustomProfile p;
  p.u.resize(static_cast<std::size_t>(grid.n_cells));
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x = grid.center(i);
    p.u[static_cast<std::size_t>(i)] = 0.5 + 0.4 * std::sin(2.0 * M_PI * x);
  }
  return p;
}

PropertyResult h_theorem_run(const std::string& label, const EquilibriumModel& model,
                             double lambda, const InitialCondition& ic, long steps) {
  SchemeConfig config;
  config.model = model;
  config.lambda = lambda;
  config.s2 = 1.0;
  config.s3 = 1.0;
  config.grid = std::holds_alternative<CustomProfile>(ic) ? Grid{0.0, 1.0, 200, 1}
                                                          : default_grid(ic);
  config.steps = steps;
  config.boundary = BoundaryMode::periodic;
  const RunReport report = run(config, ic);

  bool defined = !report.entropy.empty();
  for (const auto& rec : report.entropy) defined = defined && rec.entropy_defined;
  const MonotonicityReport mono = entropy_monotonicity_report(report.entropy);
  return make_result("h-theorem", label, defined && !report.diverged && mono.monotone,
                     std::string(defined ? "" : "entropy left its domain; ") +
                         "max single-step increase " + fmt(mono.max_increase));
}

}  // namespace

std::vector<PropertyResult> verify_dual_identity(const VerifyOptions& opts) {
  std::vector<PropertyResult> results;
  for (const NamedModel& nm : burgers_test_models()) {
    results.push_back(dual_defining_identities(nm, opts.perturb_dual));
    results.push_back(dual_derivative_is_equilibrium(nm));
    results.push_back(dual_convexity_inside(nm));
    results.push_back(dual_convexity_sharp(nm));
  }
  results.push_back(acoustic_dual_identities(1.0, 1.5, opts.perturb_dual));
  return results;
}

std::vector<PropertyResult> verify_legendre_oracle() {
  std::vector<PropertyResult> results;
  for (const NamedModel& nm : burgers_test_models()) {
    const double phi_max = convexity_bound(nm.model, nm.lambda).phi_max;
    results.push_back(
        oracle_recovers_dual(nm.label, nm.model, nm.lambda, -0.9 * phi_max, 0.9 * phi_max));
    results.push_back(
        oracle_involution(nm.label, nm.model, nm.lambda, -0.9 * phi_max, 0.9 * phi_max));
  }
  const EquilibriumModel acoustic = AcousticD1Q3{1.0};
  results.push_back(oracle_recovers_dual("acoustic-d1q3", acoustic, 1.5, -2.0, 2.0));
  results.push_back(oracle_involution("acoustic-d1q3", acoustic, 1.5, -2.0, 2.0));
  return results;
}

std::vector<PropertyResult> verify_fv_equivalence() {
  std::vector<PropertyResult> results;
  results.push_back(upwind_matches_engquist_osher());
  results.push_back(
      equivalence_at_unit_relaxation("centered-d1q3-a0.5", CenteredD1Q3{0.5}, 3.0));
  results.push_back(equivalence_at_unit_relaxation("centered-d1q2", CenteredD1Q2{}, 3.0));
  results.push_back(over_relaxation_breaks_equivalence());
  for (const NamedModel& nm : burgers_test_models()) {
    results.push_back(split_sums_to_flux(nm));
    results.push_back(split_is_monotone(nm));
  }
  return results;
}

std::vector<PropertyResult> verify_h_theorem() {
  std::vector<PropertyResult> results;
  const Grid unit{0.0, 1.0, 200, 1};
  const InitialCondition smooth = smooth_profile(unit);
  results.push_back(
      h_theorem_run("centered-d1q3-a0.5/smooth", CenteredD1Q3{0.5}, 3.0, smooth, 100));
  results.push_back(h_theorem_run("upwind-d1q3/smooth", UpwindD1Q3{}, 3.0, smooth, 100));
  results.push_back(h_theorem_run("centered-d1q2/smooth", CenteredD1Q2{}, 3.0, smooth, 100));
  results.push_back(h_theorem_run("centered-d1q3-a0.5/riemann-shock", CenteredD1Q3{0.5}, 3.0,
                                  RiemannShock{}, 100));
  results.push_back(
      h_theorem_run("upwind-d1q3/riemann-shock", UpwindD1Q3{}, 3.0, RiemannShock{}, 100));
  results.push_back(
      h_theorem_run("centered-d1q2/riemann-shock", CenteredD1Q2{}, 3.0, RiemannShock{}, 100));
  results.push_back(h_theorem_run("acoustic-d1q3/gaussian-pulse", AcousticD1Q3{1.0}, 1.5,
                                  GaussianPulse{0.5, 0.05, 1.0}, 200));
  return results;
}

std::vector<std::string> verify_suite_names() {
  return {"dual-identity", "legendre-oracle", "fv-equivalence", "h-theorem"};
}

std::vector<PropertyResult> run_verify_suites(const std::vector<std::string>& suites,
                                              const VerifyOptions& opts) {
  const auto wanted = [&suites](const std::string& name) {
    return suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end();
  };
  for (const auto& s : suites) {
    const auto known = verify_suite_names();
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw std::invalid_argument("unknown verify suite '" + s + "'");
    }
  }
  std::vector<PropertyResult> results;
  const auto append = [&results](std::vector<PropertyResult> r) {
    results.insert(results.end(), std::make_move_iterator(r.begin()),
                   std::make_move_iterator(r.end()));
  };
  if (wanted("dual-identity")) append(verify_dual_identity(opts));
  if (wanted("legendre-oracle")) append(verify_legendre_oracle());
  if (wanted("fv-equivalence")) append(verify_fv_equivalence());
  if (wanted("h-theorem")) append(verify_h_theorem());
  return results;
}

}  // namespace kb
