#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "kb/equilibrium.hpp"

using namespace kb;

namespace {

const EquilibriumModel kBurgersModels[] = {
    CenteredD1Q3{0.5}, CenteredD1Q3{0.25}, UpwindD1Q3{}, CenteredD1Q2{}};

}  // namespace

TEST_CASE("equilibrium vanishes at u = 0") {
  for (const auto& model : kBurgersModels) {
    const PopulationTriple f = equilibrium_f(0.0, model, 2.0);
    CHECK(f.f_minus == 0.0);
    CHECK(f.f_zero == 0.0);
    CHECK(f.f_plus == 0.0);
  }
}

TEST_CASE("equilibrium closed-form values") {
  const PopulationTriple c = equilibrium_f(1.0, CenteredD1Q3{0.5}, 3.0);
  CHECK(c.f_minus == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(c.f_zero == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.f_plus == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const PopulationTriple uw = equilibrium_f(-1.0, UpwindD1Q3{}, 2.0);
  CHECK(uw.f_minus == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(uw.f_zero == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(uw.f_plus == 0.0);

  const PopulationTriple q2 = equilibrium_f(1.0, CenteredD1Q2{}, 2.0);
  CHECK(q2.f_minus == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(q2.f_zero == 0.0);
  CHECK(q2.f_plus == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("equilibrium reproduces u and the Burgers flux") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (const auto& model : kBurgersModels) {
    for (const double lambda : {1.1, 2.0, 3.0}) {
      for (int trial = 0; trial < 100; ++trial) {
        const double u = dist(rng);
        const PopulationTriple f = equilibrium_f(u, model, lambda);
        CHECK(std::abs(f.f_minus + f.f_zero + f.f_plus - u) <= 1e-14 * (1.0 + std::abs(u)));
        CHECK(std::abs(lambda * (f.f_plus - f.f_minus) - 0.5 * u * u) <=
              1e-14 * (1.0 + u * u));
      }
    }
  }
}

TEST_CASE("equilibrium moments match the closed forms and the transform") {
  const MomentTriple c = equilibrium_moments(1.0, CenteredD1Q3{0.5}, 3.0);
  CHECK(c.m1 == 1.0);
  CHECK(c.m2 == 0.5);
  CHECK(c.m3 == doctest::Approx(4.5).epsilon(1e-15));

  const MomentTriple uw = equilibrium_moments(-2.0, UpwindD1Q3{}, 3.0);
  CHECK(uw.m1 == -2.0);
  CHECK(uw.m2 == 2.0);
  CHECK(uw.m3 == -6.0);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (const auto& model : kBurgersModels) {
    for (int trial = 0; trial < 100; ++trial) {
      const double u = dist(rng);
      const MomentTriple direct = equilibrium_moments(u, model, 3.0);
      const MomentTriple via = to_moments(equilibrium_f(u, model, 3.0), 3.0);
      CHECK(std::abs(direct.m1 - via.m1) <= 1e-14 * (1.0 + std::abs(u)));
      CHECK(std::abs(direct.m2 - via.m2) <= 1e-14 * (1.0 + u * u));
      CHECK(std::abs(direct.m3 - via.m3) <= 1e-13 * (1.0 + u * u));
    }
  }
}

TEST_CASE("upwind third equilibrium moment switches sign with u") {
  CHECK(equilibrium_moments(0.0, UpwindD1Q3{}, 2.0).m3 == 0.0);
  CHECK(equilibrium_moments(1.0, UpwindD1Q3{}, 2.0).m3 == 1.0);
  CHECK(equilibrium_moments(-1.0, UpwindD1Q3{}, 2.0).m3 == -1.0);
}

TEST_CASE("acoustic equilibrium") {
  const PopulationTriple f = acoustic_equilibrium_f(1.0, 0.0, 1.0, 2.0);
  CHECK(f.f_minus == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(f.f_plus == doctest::Approx(0.125).epsilon(1e-15));
  // f0 carries the rest of the density so the populations sum to rho.
  CHECK(f.f_zero == doctest::Approx(0.75).epsilon(1e-15));

  const PopulationTriple zero = acoustic_equilibrium_f(0.0, 0.0, 1.0, 2.0);
  CHECK(zero.f_minus == 0.0);
  CHECK(zero.f_zero == 0.0);
  CHECK(zero.f_plus == 0.0);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double rho = dist(rng);
    const double q = dist(rng);
    const double c0 = 1.0;
    const double lambda = 1.5;
    const PopulationTriple g = acoustic_equilibrium_f(rho, q, c0, lambda);
    const MomentTriple m = to_moments(g, lambda);
    CHECK(std::abs(m.m1 - rho) <= 1e-14);
    CHECK(std::abs(m.m2 - q) <= 1e-14);
    CHECK(std::abs(m.m3 - c0 * c0 * rho) <= 1e-14);
  }

  const MomentTriple meq = equilibrium_moments_of({1.0, 0.0, 0.3}, AcousticD1Q3{1.0}, 2.0);
  CHECK(meq.m1 == 1.0);
  CHECK(meq.m2 == 0.0);
  CHECK(meq.m3 == 1.0);
}

TEST_CASE("mirror symmetry of the centered equilibria") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (const EquilibriumModel model : {EquilibriumModel{CenteredD1Q3{0.3}},
                                       EquilibriumModel{CenteredD1Q2{}}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double u = dist(rng);
      const PopulationTriple f = equilibrium_f(u, model, 2.5);
      const PopulationTriple g = equilibrium_f(-u, model, 2.5);
      CHECK(g.f_plus == -f.f_minus);
      CHECK(g.f_minus == -f.f_plus);
      CHECK(g.f_zero == -f.f_zero);
    }
  }
}

TEST_CASE("convexity bounds") {
  CHECK(convexity_bound(CenteredD1Q3{0.5}, 1.8).phi_max == doctest::Approx(0.9));
  CHECK(convexity_bound(CenteredD1Q3{0.5}, 3.0).phi_max == doctest::Approx(1.5));
  CHECK(convexity_bound(UpwindD1Q3{}, 1.1).phi_max == doctest::Approx(1.1));
  CHECK(convexity_bound(CenteredD1Q2{}, 1.5).phi_max == doctest::Approx(1.5));

  CHECK(convexity_bound(AcousticD1Q3{1.0}, 1.5).valid);
  CHECK_FALSE(convexity_bound(AcousticD1Q3{2.0}, 1.5).valid);
  CHECK(convexity_bound(AcousticD1Q3{1.0}, 1.5).contains(100.0));
}

TEST_CASE("model validation") {
  CHECK_NOTHROW(validate_model(CenteredD1Q3{0.5}));
  CHECK_THROWS_AS(validate_model(CenteredD1Q3{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_model(CenteredD1Q3{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate_model(CenteredD1Q3{1.2}), std::invalid_argument);
  CHECK_THROWS_AS(validate_model(AcousticD1Q3{0.0}), std::invalid_argument);
  CHECK_THROWS_AS(equilibrium_f(1.0, AcousticD1Q3{1.0}, 2.0), std::invalid_argument);
}

TEST_CASE("model names") {
  CHECK(model_name(CenteredD1Q3{0.5}) == "centered-d1q3");
  CHECK(model_name(UpwindD1Q3{}) == "upwind-d1q3");
  CHECK(model_name(CenteredD1Q2{}) == "centered-d1q2");
  CHECK(model_name(AcousticD1Q3{1.0}) == "acoustic-d1q3");
}
