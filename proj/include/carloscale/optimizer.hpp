// Closed-form least-squares fit of an equal-step unit to a target system,
// plus a derivative-free numeric minimizer kept around as a cross-check.

#pragma once

#include "carloscale/system.hpp"

namespace carloscale {

// Sum of squared per-target errors at unit size x. Everything is in
// log2-octave units, so the value is dimensionless.
double objective(const TargetSystem& system, double x);

// The unique minimizer of the objective:
//
//   unit_log2 = sum(k_i * log2 J_i) / sum(k_i^2)
//
// with residuals filled in per the DerivedScale contract.
DerivedScale optimal_unit(const TargetSystem& system);

// Minimizes the objective over [lo, hi] by golden-section bracketing with a
// final parabolic refinement. Used by tests and the oracle-check command as
// an independent route to the same unit; production code paths always take
// optimal_unit. Throws std::domain_error when the minimizer does not lie
// inside the bracket.
double numeric_minimize(const TargetSystem& system, double lo, double hi, double tol);

}  // namespace carloscale
