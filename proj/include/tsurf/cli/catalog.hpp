#pragma once

#include <vector>

#include "tsurf/cli/scenarios.hpp"

namespace tsurf::cli {

// the scenario definitions, in listing order
std::vector<Scenario> build_catalog();

}  // namespace tsurf::cli
