#pragma once

#include <string>

#include "carloscale/system.hpp"

namespace carloscale {

// Scala .scl text for the first `steps` degrees of an equal-step scale.
// ASCII, LF line endings, comment lines start with "!", pitch lines are
// cents values with five decimals. The final degree doubles as the scale's
// repeat interval, which for these scales is normally not a 2:1 octave.
std::string export_scl(const DerivedScale& scale, long long steps, const std::string& description);

}  // namespace carloscale
