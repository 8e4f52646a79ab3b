#pragma once

#include <optional>

#include "planforge/driver/run_config.h"
#include "planforge/driver/stats.h"
#include "planforge/task/ground_task.h"

namespace planforge::driver {

struct RunOutcome {
    ExitStatus status = ExitStatus::no_plan_within_horizon;
    RunStats stats;
    std::optional<task::Plan> plan;
    int plan_horizon = -1;
};

// Frontend, grounder, encoder, solver, and invariant loop wired behind the
// horizon-iteration policy. Writes the configured artifact files; every plan
// is re-validated and the proven invariants audited before exit status 0.
RunOutcome run(const RunConfig& config);

}  // namespace planforge::driver
