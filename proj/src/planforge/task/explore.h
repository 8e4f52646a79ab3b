#pragma once

#include <optional>
#include <vector>

#include "planforge/task/ground_task.h"

namespace planforge::task {

// Breadth-first closure of the initial state under single-action application.
struct ReachabilityGraph {
    std::vector<State> states;  // states[0] is the initial state
    std::vector<std::vector<std::pair<int, int>>> edges;  // (action id, successor index)
    bool overflow = false;
};

ReachabilityGraph explore(const GroundTask& task, size_t cap = 1000000);

// nullopt signals Overflow (cap exceeded); callers must skip oracle checks.
std::optional<std::vector<State>> reachable_states(const GroundTask& task,
                                                   size_t cap = 1000000);

}  // namespace planforge::task
