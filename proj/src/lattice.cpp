#include "kb/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace kb {

void Grid::validate() const {
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw std::invalid_argument("grid: x_max must exceed x_min");
  }
  if (n_cells < 4) {
    throw std::invalid_argument("grid: need at least 4 cells");
  }
  if (ghost < 1) {
    throw std::invalid_argument("grid: streaming needs at least one ghost cell per side");
  }
}

MomentMatrix moment_matrix(double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("moment_matrix: lambda must be positive");
  }
  const double l2 = lambda * lambda;
  MomentMatrix t;
  t.m = {{{1.0, 1.0, 1.0},
          {-lambda, 0.0, lambda},
          {l2, 0.0, l2}}};
  t.inv = {{{0.0, -1.0 / (2.0 * lambda), 1.0 / (2.0 * l2)},
            {1.0, 0.0, -1.0 / l2},
            {0.0, 1.0 / (2.0 * lambda), 1.0 / (2.0 * l2)}}};
  return t;
}

MomentTriple to_moments(const PopulationTriple& f, double lambda) {
  MomentTriple m;
  m.m1 = f.f_minus + f.f_zero + f.f_plus;
  m.m2 = lambda * (f.f_plus - f.f_minus);
  m.m3 = lambda * lambda * (f.f_plus + f.f_minus);
  return m;
}

PopulationTriple from_moments(const MomentTriple& m, double lambda) {
  const double half_sum = m.m3 / (2.0 * lambda * lambda);  // (f+ + f-) / 2
  const double half_diff = m.m2 / (2.0 * lambda);          // (f+ - f-) / 2
  PopulationTriple f;
  f.f_minus = half_sum - half_diff;
  f.f_zero = m.m1 - 2.0 * half_sum;
  f.f_plus = half_sum + half_diff;
  return f;
}

}  // namespace kb
