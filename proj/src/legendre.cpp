#include "kb/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

ConjugateResult legendre_conjugate(const std::function<std::optional<double>(double)>& g,
                                   double y, double lo, double hi, int coarse_samples,
                                   double x_tol) {
  const auto objective = [&](double x) -> double {
    const auto v = g(x);
    return v ? y * x - *v : kNegInf;  // outside the domain g is +infinity
  };

  const int n = std::max(coarse_samples, 8);
  double best_x = lo;
  double best_v = kNegInf;
  int best_k = 0;
  for (int k = 0; k <= n; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / n;
    const double v = objective(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
      best_k = k;
    }
  }

  ConjugateResult result{best_v, best_x, true};

  // A boundary winner is fine when the domain of g ends there (the objective
  // is -inf just past it); otherwise a concave objective that still rises
  // outward means the supremum escaped the interval.
  const double probe = std::max(x_tol, 1e-8 * (std::abs(hi - lo) + 1.0));
  if (best_k == 0 && objective(lo - probe) > best_v) result.bracketed = false;
  if (best_k == n && objective(hi + probe) > best_v) result.bracketed = false;

  // Golden-section refinement inside the coarse bracket.
  double a = lo + (hi - lo) * static_cast<double>(std::max(best_k - 1, 0)) / n;
  double b = lo + (hi - lo) * static_cast<double>(std::min(best_k + 1, n)) / n;
  constexpr double kGolden = 0.6180339887498949;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double v1 = objective(x1);
  double v2 = objective(x2);
  for (int iter = 0; iter < 200 && (b - a) > x_tol; ++iter) {
    if (v1 < v2) {
      a = x1;
      x1 = x2;
      v1 = v2;
      x2 = a + kGolden * (b - a);
      v2 = objective(x2);
    } else {
      b = x2;
      x2 = x1;
      v2 = v1;
      x1 = b - kGolden * (b - a);
      v1 = objective(x1);
    }
  }
  for (const auto& [x, v] : {std::pair{x1, v1}, std::pair{x2, v2}}) {
    if (v > result.value) {
      result.value = v;
      result.argmax = x;
    }
  }
  return result;
}

}  // namespace kb
