#pragma once

// Umbrella header for the whole library.

#include "starfactor/canonical.hpp"
#include "starfactor/constructions.hpp"
#include "starfactor/constructive.hpp"
#include "starfactor/domination.hpp"
#include "starfactor/enumeration.hpp"
#include "starfactor/exact_oracle.hpp"
#include "starfactor/random.hpp"
#include "starfactor/star_factor.hpp"
#include "starfactor/text_io.hpp"
#include "starfactor/tournament.hpp"
#include "starfactor/transitive.hpp"
#include "starfactor/vertex_set.hpp"

namespace starfactor {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace starfactor
