#pragma once

#include <cmath>
#include <string>
#include <variant>

#include "kb/lattice.hpp"

namespace kb {

// Equilibrium families for the Burgers lattice schemes plus linear acoustics.
// alpha weights how much of the conserved quantity rests on the zero-velocity
// slot of the centered family. alpha = 1 degenerates to the two-velocity
// scheme and is rejected in favour of the explicit CenteredD1Q2 tag.
struct CenteredD1Q3 { double alpha = 0.5; };
struct UpwindD1Q3 {};
struct CenteredD1Q2 {};
struct AcousticD1Q3 { double c0 = 1.0; };

using EquilibriumModel =
    std::variant<CenteredD1Q3, UpwindD1Q3, CenteredD1Q2, AcousticD1Q3>;

bool is_acoustic(const EquilibriumModel& model);
std::string model_name(const EquilibriumModel& model);
void validate_model(const EquilibriumModel& model);  // throws std::invalid_argument

// Burgers equilibria for conserved scalar u. Defined for every u; nonlinear
// stability is a separate question (see convexity_bound).
PopulationTriple equilibrium_f(double u, const EquilibriumModel& model, double lambda);
MomentTriple equilibrium_moments(double u, const EquilibriumModel& model, double lambda);

// Acoustic equilibrium for the conserved pair (rho, q). Moments of the result
// are (rho, q, c0^2 rho).
PopulationTriple acoustic_equilibrium_f(double rho, double q, double c0, double lambda);

// Equilibrium moments keyed on the conserved slots of m: m1 for the Burgers
// models, (m1, m2) for acoustics.
MomentTriple equilibrium_moments_of(const MomentTriple& m, const EquilibriumModel& model,
                                    double lambda);

// Domain of the entropy variable phi on which the dual decomposition stays
// convex: phi_max = alpha*lambda (centered D1Q3), lambda (upwind and D1Q2).
// The acoustic decomposition constrains the parameter instead of the state:
// valid iff c0 <= lambda, with no bound on phi.
struct ConvexityDomain {
  double phi_max = 0.0;
  bool valid = true;
  bool contains(double phi) const { return valid && std::abs(phi) <= phi_max; }
};

ConvexityDomain convexity_bound(const EquilibriumModel& model, double lambda);

}  // namespace kb
