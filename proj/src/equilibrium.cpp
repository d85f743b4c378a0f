#include "kb/equilibrium.hpp"

#include <limits>
#include <stdexcept>

namespace kb {

bool is_acoustic(const EquilibriumModel& model) {
  return std::holds_alternative<AcousticD1Q3>(model);
}

std::string model_name(const EquilibriumModel& model) {
  struct Visitor {
    std::string operator()(const CenteredD1Q3&) const { return "centered-d1q3"; }
    std::string operator()(const UpwindD1Q3&) const { return "upwind-d1q3"; }
    std::string operator()(const CenteredD1Q2&) const { return "centered-d1q2"; }
    std::string operator()(const AcousticD1Q3&) const { return "acoustic-d1q3"; }
  };
  return std::visit(Visitor{}, model);
}

void validate_model(const EquilibriumModel& model) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    if (!(c->alpha > 0.0) || !(c->alpha <= 1.0)) {
      throw std::invalid_argument("centered-d1q3: alpha must lie in (0, 1]");
    }
    if (c->alpha == 1.0) {
      // The resting slot's entropy degenerates at alpha = 1; that scheme is
      // the two-velocity one and carries its own tag.
      throw std::invalid_argument("centered-d1q3: alpha = 1 is the D1Q2 scheme; use centered-d1q2");
    }
  } else if (const auto* a = std::get_if<AcousticD1Q3>(&model)) {
    if (!(a->c0 > 0.0)) {
      throw std::invalid_argument("acoustic-d1q3: c0 must be positive");
    }
  }
}

PopulationTriple equilibrium_f(double u, const EquilibriumModel& model, double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    const double rest = 0.5 * c->alpha * u;
    const double flux = u * u / (4.0 * lambda);
    return {rest - flux, (1.0 - c->alpha) * u, rest + flux};
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    const double flux = u * u / (2.0 * lambda);
    if (u >= 0.0) {
      return {0.0, u - flux, flux};
    }
    return {-flux, u + flux, 0.0};
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    const double half = 0.5 * u;
    const double flux = u * u / (4.0 * lambda);
    return {half - flux, 0.0, half + flux};
  }
  throw std::invalid_argument("equilibrium_f: the acoustic model needs (rho, q), use acoustic_equilibrium_f");
}

MomentTriple equilibrium_moments(double u, const EquilibriumModel& model, double lambda) {
  const double half_u2 = 0.5 * u * u;
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    return {u, half_u2, c->alpha * lambda * lambda * u};
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    // sgn(0) := 0; both branches agree there since u^2 = 0.
    return {u, half_u2, u >= 0.0 ? lambda * half_u2 : -lambda * half_u2};
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    return {u, half_u2, lambda * lambda * u};
  }
  throw std::invalid_argument("equilibrium_moments: the acoustic model needs (rho, q)");
}

PopulationTriple acoustic_equilibrium_f(double rho, double q, double c0, double lambda) {
  const double r = c0 * c0 / (lambda * lambda);
  const double half_r = 0.5 * r;
  PopulationTriple f;
  f.f_plus = half_r * (rho + lambda * q / (c0 * c0));
  f.f_minus = half_r * (rho - lambda * q / (c0 * c0));
  f.f_zero = (1.0 - r) * rho;
  return f;
}

MomentTriple equilibrium_moments_of(const MomentTriple& m, const EquilibriumModel& model,
                                    double lambda) {
  if (const auto* a = std::get_if<AcousticD1Q3>(&model)) {
    return {m.m1, m.m2, a->c0 * a->c0 * m.m1};
  }
  return equilibrium_moments(m.m1, model, lambda);
}

ConvexityDomain convexity_bound(const EquilibriumModel& model, double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    return {c->alpha * lambda, true};
  }
  if (std::holds_alternative<UpwindD1Q3>(model) || std::holds_alternative<CenteredD1Q2>(model)) {
    return {lambda, true};
  }
  const auto& a = std::get<AcousticD1Q3>(model);
  return {std::numeric_limits<double>::infinity(), a.c0 <= lambda};
}

}  // namespace kb
