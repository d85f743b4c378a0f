#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kb/entropy.hpp"

namespace kb {

// sum_cells sum_j h_j(f_j) dx. Undefined (nullopt) as soon as one population
// leaves its entropy domain; the run keeps going, the flag is the data. The
// D1Q2 scheme contributes only its two moving slots.
std::optional<double> total_entropy(std::span<const PopulationTriple> cells,
                                    const EquilibriumModel& model, double lambda, double dx);

struct EntropyRecord {
  long step = 0;
  double time = 0.0;
  double total_H = 0.0;  // NaN when !entropy_defined
  double total_mass = 0.0;
  double max_abs_u = 0.0;
  bool in_convexity_domain = true;
  bool entropy_defined = true;
};

using EntropySeries = std::vector<EntropyRecord>;

struct MonotonicityReport {
  double max_increase = 0.0;
  bool monotone = true;
};

// Largest single-step increase of total_H over consecutive defined records,
// with monotone = (max_increase <= 1e-12 |H0|).
MonotonicityReport entropy_monotonicity_report(const EntropySeries& series);

}  // namespace kb
