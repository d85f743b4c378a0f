#pragma once

#include <optional>

#include "kb/equilibrium.hpp"

namespace kb {

enum class Slot { minus, zero, plus };

// One dual-entropy decomposition h_j*(phi): the parts sum to phi^2/2 and the
// velocity-weighted difference lambda (h+* - h-*) equals phi^3/6.
struct DualParts {
  double minus = 0.0;
  double zero = 0.0;
  double plus = 0.0;
  double sum() const { return minus + zero + plus; }
};

// Burgers models only (the scalar entropy variable is phi = u). The acoustic
// parts take distinct per-slot arguments; use dual_part for those.
DualParts dual_entropy_parts(double phi, const EquilibriumModel& model, double lambda);

// h_j*(y) of one slot as a scalar function of its own argument.
double dual_part(double y, Slot slot, const EquilibriumModel& model, double lambda);

// Microscopic entropy h_j(f). Returns nullopt when f lies outside the slot's
// domain; callers must treat that as "entropy undefined" and never clamp.
// The zero slot of the D1Q2 scheme has no entropy function at all.
std::optional<double> micro_entropy(double f, Slot slot, const EquilibriumModel& model,
                                    double lambda);

// Closed domain of h_j, with infinite endpoints where unbounded.
struct SlotDomain {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = false;
  bool contains(double f) const { return !empty && f >= lo && f <= hi; }
};

SlotDomain micro_entropy_domain(Slot slot, const EquilibriumModel& model, double lambda);

}  // namespace kb
