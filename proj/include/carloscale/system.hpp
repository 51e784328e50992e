#pragma once

#include <string>
#include <vector>

#include "carloscale/interval.hpp"

namespace carloscale {

// One least-squares term: the interval should sit `steps` units above the
// tonic.
struct Target {
    int steps = 1;
    JustInterval interval;

    friend bool operator==(const Target&, const Target&) = default;
};

// An optimization instance: the unit size is fit against every target at
// once. Invariants: at least one target, every steps >= 1, every target
// ratio > 1. Duplicate targets are allowed and simply count twice.
struct TargetSystem {
    std::vector<Target> targets;
    std::string label;
};

// Throws std::invalid_argument when a TargetSystem invariant is broken.
void validate(const TargetSystem& system);

// Result of the least-squares unit fit. Residuals are signed cents, one
// per target in declaration order; positive means the tempered interval
// lands sharp of just.
struct DerivedScale {
    double unit_log2 = 0.0;
    double unit_cents = 0.0;
    std::vector<double> residual_cents;
    TargetSystem system;
};

}  // namespace carloscale
