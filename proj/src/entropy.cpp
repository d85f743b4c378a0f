#include "kb/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pow32(double x) { return x * std::sqrt(x); }  // x^(3/2), x >= 0

// Centered family closed forms, shared by CenteredD1Q3 and CenteredD1Q2
// (the latter is the alpha = 1 member with the zero slot dropped).
std::optional<double> centered_micro(double f, Slot slot, double alpha, double lambda) {
  const double l2 = lambda * lambda;
  switch (slot) {
    case Slot::plus: {
      const double t = alpha * alpha + 4.0 * f / lambda;
      if (t < 0.0) return std::nullopt;
      return l2 / 6.0 * (pow32(t) - (alpha * alpha * alpha + 6.0 * alpha * f / lambda));
    }
    case Slot::zero:
      return f * f / (2.0 * (1.0 - alpha));
    case Slot::minus: {
      const double t = alpha * alpha - 4.0 * f / lambda;
      if (t < 0.0) return std::nullopt;
      return l2 / 6.0 * (pow32(t) + 6.0 * alpha * f / lambda - alpha * alpha * alpha);
    }
  }
  return std::nullopt;
}

}  // namespace

DualParts dual_entropy_parts(double phi, const EquilibriumModel& model, double lambda) {
  DualParts p;
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    const double quad = 0.25 * c->alpha * phi * phi;
    const double cubic = phi * phi * phi / (12.0 * lambda);
    p.minus = quad - cubic;
    p.zero = 0.5 * (1.0 - c->alpha) * phi * phi;
    p.plus = quad + cubic;
    return p;
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    const double cubic = phi * phi * phi / (6.0 * lambda);
    if (phi >= 0.0) {
      p.plus = cubic;
      p.zero = 0.5 * phi * phi - cubic;
    } else {
      p.minus = -cubic;
      p.zero = 0.5 * phi * phi + cubic;
    }
    return p;
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    const double quad = 0.25 * phi * phi;
    const double cubic = phi * phi * phi / (12.0 * lambda);
    p.minus = quad - cubic;
    p.plus = quad + cubic;
    return p;
  }
  throw std::invalid_argument(
      "dual_entropy_parts: the acoustic entropy variable is a pair; use dual_part per slot");
}

double dual_part(double y, Slot slot, const EquilibriumModel& model, double lambda) {
  if (const auto* a = std::get_if<AcousticD1Q3>(&model)) {
    const double r = a->c0 * a->c0 / (lambda * lambda);
    if (slot == Slot::zero) return 0.5 * (1.0 - r) * y * y;
    return 0.25 * r * y * y;
  }
  const DualParts p = dual_entropy_parts(y, model, lambda);
  switch (slot) {
    case Slot::minus: return p.minus;
    case Slot::zero: return p.zero;
    case Slot::plus: return p.plus;
  }
  return 0.0;
}

std::optional<double> micro_entropy(double f, Slot slot, const EquilibriumModel& model,
                                    double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    return centered_micro(f, slot, c->alpha, lambda);
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    switch (slot) {
      case Slot::plus:
        if (f < 0.0) return std::nullopt;
        return 2.0 / 3.0 * f * std::sqrt(2.0 * lambda * f);
      case Slot::zero: {
        const double a = std::abs(f);
        if (a > 0.5 * lambda) return std::nullopt;
        const double t = 1.0 - 2.0 * a / lambda;
        return lambda * lambda / 3.0 * (pow32(t) + 3.0 * a / lambda - 1.0);
      }
      case Slot::minus:
        if (f > 0.0) return std::nullopt;
        return -2.0 / 3.0 * f * std::sqrt(-2.0 * lambda * f);
    }
    return std::nullopt;
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    if (slot == Slot::zero) return std::nullopt;  // h0 does not exist for D1Q2
    return centered_micro(f, slot, 1.0, lambda);
  }
  const auto& a = std::get<AcousticD1Q3>(model);
  const double r = a.c0 * a.c0 / (lambda * lambda);
  if (slot == Slot::zero) {
    if (r >= 1.0) return std::nullopt;
    return f * f / (2.0 * (1.0 - r));
  }
  return f * f / r;
}

SlotDomain micro_entropy_domain(Slot slot, const EquilibriumModel& model, double lambda) {
  if (const auto* c = std::get_if<CenteredD1Q3>(&model)) {
    const double edge = 0.25 * c->alpha * c->alpha * lambda;
    switch (slot) {
      case Slot::plus: return {-edge, kInf};
      case Slot::zero: return {-kInf, kInf};
      case Slot::minus: return {-kInf, edge};
    }
  }
  if (std::holds_alternative<UpwindD1Q3>(model)) {
    switch (slot) {
      case Slot::plus: return {0.0, kInf};
      case Slot::zero: return {-0.5 * lambda, 0.5 * lambda};
      case Slot::minus: return {-kInf, 0.0};
    }
  }
  if (std::holds_alternative<CenteredD1Q2>(model)) {
    const double edge = 0.25 * lambda;
    switch (slot) {
      case Slot::plus: return {-edge, kInf};
      case Slot::zero: return {0.0, 0.0, true};
      case Slot::minus: return {-kInf, edge};
    }
  }
  const auto& a = std::get<AcousticD1Q3>(model);
  if (slot == Slot::zero && a.c0 >= lambda) return {0.0, 0.0, true};
  return {-kInf, kInf};
}

}  // namespace kb
