#pragma once

#include <string>
#include <vector>

#include "planforge/invariants/loop.h"

namespace planforge::driver {

struct RunStats {
    std::vector<invariants::HorizonRecord> horizons;
};

// Deterministic JSON: alphabetically ordered keys, "schema": 1 versioning.
std::string print_stats(const RunStats& stats, bool include_timing = true);

}  // namespace planforge::driver
