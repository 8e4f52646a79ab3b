#pragma once

#include "planforge/task/ground_task.h"
#include "planforge/task/planning_task.h"

namespace planforge::task {

struct GroundingOptions {
    size_t action_cap = 1000000;
};

// Instantiates every action schema over all type-respecting bindings,
// evaluates equality constraints at binding time, drops instances with
// contradictory effects, and restricts the atom universe with a delete-free
// relaxed-reachability fixpoint. Deterministic: sorted instantiation order.
GroundTask ground(const PlanningTask& task, const GroundingOptions& options = {});

}  // namespace planforge::task
