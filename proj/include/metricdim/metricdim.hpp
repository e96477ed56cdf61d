#pragma once

// Umbrella header: metric dimension of regular bipartite graph families.

#include "metricdim/bitset.hpp"
#include "metricdim/constructions.hpp"
#include "metricdim/distance.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/families.hpp"
#include "metricdim/gaps.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/graph6.hpp"
#include "metricdim/resolve.hpp"

namespace metricdim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace metricdim
