#include "kb/diagnostics.hpp"

#include <cmath>

namespace kb {

std::optional<double> total_entropy(std::span<const PopulationTriple> cells,
                                    const EquilibriumModel& model, double lambda, double dx) {
  const bool skip_zero_slot = std::holds_alternative<CenteredD1Q2>(model);
  double sum = 0.0;
  for (const auto& f : cells) {
    const auto h_minus = micro_entropy(f.f_minus, Slot::minus, model, lambda);
    const auto h_plus = micro_entropy(f.f_plus, Slot::plus, model, lambda);
    if (!h_minus || !h_plus) return std::nullopt;
    sum += *h_minus + *h_plus;
    if (!skip_zero_slot) {
      const auto h_zero = micro_entropy(f.f_zero, Slot::zero, model, lambda);
      if (!h_zero) return std::nullopt;
      sum += *h_zero;
    }
  }
  return sum * dx;
}

MonotonicityReport entropy_monotonicity_report(const EntropySeries& series) {
  MonotonicityReport report;
  double h0 = 0.0;
  bool have_h0 = false;
  const EntropyRecord* prev = nullptr;
  for (const auto& rec : series) {
    if (!rec.entropy_defined) {
      prev = nullptr;
      continue;
    }
    if (!have_h0) {
      h0 = rec.total_H;
      have_h0 = true;
    }
    if (prev != nullptr) {
      report.max_increase = std::max(report.max_increase, rec.total_H - prev->total_H);
    }
    prev = &rec;
  }
  report.monotone = have_h0 && report.max_increase <= 1e-12 * std::abs(h0);
  return report;
}

}  // namespace kb
