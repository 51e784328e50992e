// Named parameterizations that expand into target systems.

#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "carloscale/system.hpp"

namespace carloscale {

// (a,b)-Carlos: minor third at a units, major third at b, perfect fifth at
// a+b. Requires 1 <= a < b.
TargetSystem carlos2(int a, int b);

// (a,b,c)-Carlos: the fifth decoupled to its own step count c. Requires
// 1 <= a < b < c. With c = a+b this is exactly the (a,b)-Carlos system.
TargetSystem carlos3(int a, int b, int c);

// Two arbitrary intervals at a and b units plus their composition at a+b.
// No ordering constraint between a and b; the intervals must differ.
TargetSystem general_pair(const JustInterval& ia, int a, const JustInterval& ib, int b);

// Pentatonic fit: major second at a units, major third at 2a, minor third
// at b, perfect fifth at 2a+b. The major sixth (3a+b) is left out as the
// inversion of the already-included minor third. Requires 1 <= a < b.
TargetSystem pentatonic(int a, int b);

// User-defined target list; interval tokens parse per parse_interval.
TargetSystem custom_system(const std::vector<std::pair<int, std::string>>& entries);

// Parses "4:m3,5:M3,9:P5" into a custom system.
TargetSystem parse_system_spec(std::string_view text);

}  // namespace carloscale
