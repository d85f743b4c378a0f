#pragma once

#include <functional>
#include <optional>

namespace kb {

struct ConjugateResult {
  double value = 0.0;
  double argmax = 0.0;
  // False when the best point sits on an interval endpoint with the objective
  // still rising past it, i.e. the supremum likely escapes the interval.
  bool bracketed = true;
};

// Numeric Legendre conjugate sup_{x in [lo, hi]} (y x - g(x)) by coarse
// sampling plus golden-section refinement. g may return nullopt outside its
// domain (treated as +infinity, so those points never win). Accuracy is
// limited to ~1e-6 near fractional-power domain edges; intended as a test
// oracle, not a production transform.
ConjugateResult legendre_conjugate(const std::function<std::optional<double>(double)>& g,
                                   double y, double lo, double hi,
                                   int coarse_samples = 256, double x_tol = 1e-9);

}  // namespace kb
