#include <cmath>
#include <random>

#include "doctest.h"
#include "kb/entropy.hpp"
#include "kb/legendre.hpp"

using namespace kb;

namespace {

const EquilibriumModel kBurgersModels[] = {
    CenteredD1Q3{0.5}, CenteredD1Q3{0.25}, UpwindD1Q3{}, CenteredD1Q2{}};

double slot_value(const PopulationTriple& f, Slot s) {
  return s == Slot::minus ? f.f_minus : (s == Slot::zero ? f.f_zero : f.f_plus);
}

}  // namespace

TEST_CASE("dual parts vanish at phi = 0 and close the defining identities") {
  for (const auto& model : kBurgersModels) {
    const DualParts at_zero = dual_entropy_parts(0.0, model, 2.0);
    CHECK(at_zero.minus == 0.0);
    CHECK(at_zero.zero == 0.0);
    CHECK(at_zero.plus == 0.0);

    for (const double lambda : {1.0, 1.8, 3.0}) {
      // phi = lambda: the identities force the sum and flux values.
      const DualParts p = dual_entropy_parts(lambda, model, lambda);
      CHECK(p.sum() == doctest::Approx(0.5 * lambda * lambda).epsilon(1e-13));
      CHECK(lambda * (p.plus - p.minus) ==
            doctest::Approx(lambda * lambda * lambda / 6.0).epsilon(1e-13));

      const double phi_max = convexity_bound(model, lambda).phi_max;
      for (int k = 0; k < 200; ++k) {
        const double phi = -phi_max + 2.0 * phi_max * k / 199.0;
        const DualParts q = dual_entropy_parts(phi, model, lambda);
        CHECK(std::abs(q.sum() - 0.5 * phi * phi) <= 1e-12);
        CHECK(std::abs(lambda * (q.plus - q.minus) - phi * phi * phi / 6.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("upwind dual parts, positive branch") {
  const DualParts p = dual_entropy_parts(1.0, UpwindD1Q3{}, 2.0);
  CHECK(p.plus == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(p.zero == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
  CHECK(p.minus == 0.0);
}

TEST_CASE("dual parts derivative is the equilibrium distribution") {
  const double eps = 1e-6;
  for (const auto& model : kBurgersModels) {
    const double lambda = 2.0;
    const double phi_max = convexity_bound(model, lambda).phi_max;
    for (int k = 0; k < 50; ++k) {
      const double phi = -0.95 * phi_max + 1.9 * phi_max * k / 49.0;
      const DualParts hi = dual_entropy_parts(phi + eps, model, lambda);
      const DualParts lo = dual_entropy_parts(phi - eps, model, lambda);
      const PopulationTriple eq = equilibrium_f(phi, model, lambda);
      CHECK(std::abs((hi.minus - lo.minus) / (2.0 * eps) - eq.f_minus) <= 1e-6);
      CHECK(std::abs((hi.zero - lo.zero) / (2.0 * eps) - eq.f_zero) <= 1e-6);
      CHECK(std::abs((hi.plus - lo.plus) / (2.0 * eps) - eq.f_plus) <= 1e-6);
    }
  }
}

TEST_CASE("micro entropy closed-form values") {
  // Every defined slot gives zero entropy at f = 0.
  for (const auto& model : kBurgersModels) {
    for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
      if (micro_entropy_domain(slot, model, 2.0).empty) continue;
      const auto h = micro_entropy(0.0, slot, model, 2.0);
      REQUIRE(h.has_value());
      CHECK(std::abs(*h) <= 1e-15);
    }
  }

  const double lambda = 2.0;
  const auto h_up = micro_entropy(0.5 * lambda, Slot::plus, UpwindD1Q3{}, lambda);
  REQUIRE(h_up.has_value());
  CHECK(*h_up == doctest::Approx(lambda * lambda / 3.0).epsilon(1e-14));

  const auto h_zero = micro_entropy(0.1, Slot::zero, CenteredD1Q3{0.5}, lambda);
  REQUIRE(h_zero.has_value());
  CHECK(*h_zero == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("micro entropy domains") {
  CHECK_FALSE(micro_entropy(0.0, Slot::zero, CenteredD1Q2{}, 2.0).has_value());
  CHECK(micro_entropy_domain(Slot::zero, CenteredD1Q2{}, 2.0).empty);

  CHECK_FALSE(micro_entropy(-0.1, Slot::plus, UpwindD1Q3{}, 2.0).has_value());
  CHECK_FALSE(micro_entropy(0.1, Slot::minus, UpwindD1Q3{}, 2.0).has_value());
  CHECK_FALSE(micro_entropy(1.01, Slot::zero, UpwindD1Q3{}, 2.0).has_value());
  CHECK(micro_entropy(0.99, Slot::zero, UpwindD1Q3{}, 2.0).has_value());

  // Centered slots lose their domain past alpha^2 lambda / 4.
  const EquilibriumModel c = CenteredD1Q3{0.5};
  const double edge = 0.25 * 0.5 * 0.5 * 2.0;
  CHECK(micro_entropy(-edge, Slot::plus, c, 2.0).has_value());
  CHECK_FALSE(micro_entropy(-edge - 1e-9, Slot::plus, c, 2.0).has_value());
  CHECK(micro_entropy(edge, Slot::minus, c, 2.0).has_value());
  CHECK_FALSE(micro_entropy(edge + 1e-9, Slot::minus, c, 2.0).has_value());

  // The acoustic rest slot needs c0 < lambda.
  CHECK(micro_entropy(0.3, Slot::zero, AcousticD1Q3{1.0}, 1.5).has_value());
  CHECK_FALSE(micro_entropy(0.3, Slot::zero, AcousticD1Q3{1.5}, 1.5).has_value());
}

TEST_CASE("entropy and entropy flux at equilibrium") {
  // sum_j h_j(f_j^eq(u)) = u^2/2 and lambda (h+ - h-) = u^3/3 on the
  // convexity domain.
  for (const auto& model : kBurgersModels) {
    const double lambda = 2.0;
    const double phi_max = convexity_bound(model, lambda).phi_max;
    for (int k = 0; k < 50; ++k) {
      const double u = -0.98 * phi_max + 1.96 * phi_max * k / 49.0;
      const PopulationTriple eq = equilibrium_f(u, model, lambda);
      double eta = 0.0;
      double h_plus = 0.0;
      double h_minus = 0.0;
      for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
        if (micro_entropy_domain(slot, model, lambda).empty) continue;
        const auto h = micro_entropy(slot_value(eq, slot), slot, model, lambda);
        REQUIRE(h.has_value());
        eta += *h;
        if (slot == Slot::plus) h_plus = *h;
        if (slot == Slot::minus) h_minus = *h;
      }
      CHECK(std::abs(eta - 0.5 * u * u) <= 1e-12);
      CHECK(std::abs(lambda * (h_plus - h_minus) - u * u * u / 3.0) <= 1e-12);
    }
  }
}

TEST_CASE("equilibrium minimizes the microscopic entropy at fixed u") {
  std::mt19937 rng(17);
  for (const auto& model : kBurgersModels) {
    const double lambda = 2.0;
    const double phi_max = convexity_bound(model, lambda).phi_max;
    std::uniform_real_distribution<double> du(-0.9 * phi_max, 0.9 * phi_max);
    const bool d1q2 = std::holds_alternative<CenteredD1Q2>(model);

    int accepted = 0;
    while (accepted < 200) {
      const double u = du(rng);
      const SlotDomain dp = micro_entropy_domain(Slot::plus, model, lambda);
      const SlotDomain dm = micro_entropy_domain(Slot::minus, model, lambda);
      std::uniform_real_distribution<double> dplus(dp.lo, std::min(dp.hi, lambda));
      std::uniform_real_distribution<double> dminus(std::max(dm.lo, -lambda), dm.hi);
      const double f_plus = dplus(rng);
      const double f_minus = dminus(rng);
      const double f_zero = d1q2 ? 0.0 : u - f_plus - f_minus;
      if (d1q2 && std::abs(f_plus + f_minus - u) > 0.0) {
        // Two populations cannot vary freely at fixed u; perturb around the
        // equilibrium along the only free direction instead.
        const PopulationTriple eq = equilibrium_f(u, model, lambda);
        std::uniform_real_distribution<double> dd(-0.05 * lambda, 0.05 * lambda);
        const double shift = dd(rng);
        const double p = eq.f_plus + shift;
        const double m = eq.f_minus - shift;
        const auto hp = micro_entropy(p, Slot::plus, model, lambda);
        const auto hm = micro_entropy(m, Slot::minus, model, lambda);
        const auto hpe = micro_entropy(eq.f_plus, Slot::plus, model, lambda);
        const auto hme = micro_entropy(eq.f_minus, Slot::minus, model, lambda);
        if (!hp || !hm) continue;
        ++accepted;
        CHECK(*hp + *hm >= *hpe + *hme - 1e-12);
        continue;
      }
      if (!micro_entropy_domain(Slot::zero, model, lambda).contains(f_zero)) continue;
      const auto hp = micro_entropy(f_plus, Slot::plus, model, lambda);
      const auto hz = micro_entropy(f_zero, Slot::zero, model, lambda);
      const auto hm = micro_entropy(f_minus, Slot::minus, model, lambda);
      if (!hp || !hz || !hm) continue;
      ++accepted;

      const PopulationTriple eq = equilibrium_f(u, model, lambda);
      double h_eq = 0.0;
      for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
        h_eq += micro_entropy(slot_value(eq, slot), slot, model, lambda).value();
      }
      CHECK(*hp + *hz + *hm >= h_eq - 1e-12);
    }
  }
}

TEST_CASE("numeric Legendre conjugate basics") {
  // Conjugate of a quadratic: sup_f (y f - f^2) = y^2 / 4. This is the
  // centered alpha = 1/2 rest slot, whose dual is (1 - alpha) phi^2 / 2.
  const auto quadratic = [](double f) -> std::optional<double> { return f * f; };
  for (const double y : {-1.0, -0.3, 0.0, 0.5, 1.2}) {
    const ConjugateResult r = legendre_conjugate(quadratic, y, -3.0, 3.0);
    CHECK(r.bracketed);
    CHECK(std::abs(r.value - 0.25 * y * y) <= 1e-8);
  }

  // Conjugate at y = 0 is minus the minimum.
  const auto shifted = [](double f) -> std::optional<double> {
    return (f - 0.5) * (f - 0.5) + 2.0;
  };
  const ConjugateResult at_zero = legendre_conjugate(shifted, 0.0, -3.0, 3.0);
  CHECK(std::abs(at_zero.value + 2.0) <= 1e-8);

  // An interval that misses the maximizer is reported as unbracketed.
  const ConjugateResult off = legendre_conjugate(quadratic, 0.0, 0.5, 1.0);
  CHECK_FALSE(off.bracketed);
}

TEST_CASE("numeric conjugate of h recovers the dual parts") {
  for (const auto& model : kBurgersModels) {
    const double lambda = 2.0;
    const double phi_max = convexity_bound(model, lambda).phi_max;
    for (const Slot slot : {Slot::minus, Slot::zero, Slot::plus}) {
      if (micro_entropy_domain(slot, model, lambda).empty) continue;
      const SlotDomain dom = micro_entropy_domain(slot, model, lambda);
      const double lo = std::max(dom.lo, -lambda);
      const double hi = std::min(dom.hi, lambda);
      for (int k = 0; k < 25; ++k) {
        const double phi = -0.9 * phi_max + 1.8 * phi_max * k / 24.0;
        const auto h = [&](double f) { return micro_entropy(f, slot, model, lambda); };
        const ConjugateResult r = legendre_conjugate(h, phi, lo, hi);
        CHECK(std::abs(r.value - dual_part(phi, slot, model, lambda)) <= 1e-6);
      }
    }
  }
}
