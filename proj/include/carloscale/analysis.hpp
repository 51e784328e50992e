// Octave-fit analysis, tolerance gating, and exhaustive parameter sweeps.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "carloscale/optimizer.hpp"

namespace carloscale {

// How close a whole number of units comes to the 2:1 octave.
struct OctaveFit {
    double exact_units = 0.0;        // 1200 / unit_cents
    long long nearest_steps = 0;     // round(exact_units), ties away from zero
    double deviation_cents = 0.0;    // nearest_steps * unit_cents - 1200, positive = sharp

    friend bool operator==(const OctaveFit&, const OctaveFit&) = default;
};

OctaveFit octave_fit(const DerivedScale& scale);

struct ToleranceResult {
    bool within = false;
    double max_abs_deviation_cents = 0.0;
};

// within is true iff every |residual| < tol_cents (strict).
ToleranceResult tolerance_check(const DerivedScale& scale, double tol_cents);

struct SearchHit {
    std::vector<int> params;
    DerivedScale scale;
    OctaveFit octave;
    double max_abs_deviation_cents = 0.0;
    bool gcd_trivial = false;  // gcd(params) > 1: a subdivided smaller scale
};

// Enumerates all 1 <= a < b <= b_max with a <= a_max and returns the pairs
// whose scale passes the tolerance gate, ordered by ascending (a+b, a).
// gcd-trivial pairs are always flagged and omitted only when
// exclude_gcd_trivial is set.
std::vector<SearchHit> search_carlos2(int a_max, int b_max, double tol_cents,
                                      bool exclude_gcd_trivial);

// A parameter family the generic sweep can enumerate: a tuple validity
// predicate plus the system built from a tuple.
struct ParamFamily {
    std::string name;
    int arity = 0;
    std::function<bool(std::span<const int>)> valid;
    std::function<TargetSystem(std::span<const int>)> build;
};

ParamFamily carlos2_family();
ParamFamily carlos3_family();
ParamFamily pentatonic_family();
ParamFamily pair_family(JustInterval ia, JustInterval ib);

// Exhaustive sweep of the family over 1..bounds[i] per component with the
// same gate and flagging as search_carlos2. Hits are ordered by ascending
// (sum of tuple, then tuple lexicographically). Throws
// std::invalid_argument unless exactly one positive bound is given per
// parameter.
std::vector<SearchHit> search_generic(const ParamFamily& family, std::span<const int> bounds,
                                      double tol_cents, bool exclude_gcd_trivial = false);

}  // namespace carloscale
