#include "carloscale/system.hpp"

#include <stdexcept>

namespace carloscale {

void validate(const TargetSystem& system) {
    if (system.targets.empty())
        throw std::invalid_argument("target system needs at least one target");
    for (const Target& t : system.targets) {
        if (t.steps < 1)
            throw std::invalid_argument("target step count must be at least 1");
        if (t.interval.ratio.num() <= t.interval.ratio.den())
            throw std::invalid_argument("target ratio must exceed 1 (ascending interval)");
    }
}

}  // namespace carloscale
