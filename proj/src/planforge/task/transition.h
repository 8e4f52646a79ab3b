#pragma once

#include <optional>
#include <span>
#include <string>

#include "planforge/task/ground_task.h"

namespace planforge::task {

struct ApplyError : Error {
    enum class Kind { not_applicable, interference };

    ApplyError(Kind k, int a, int b, const std::string& message)
        : Error(message), kind(k), action_a(a), action_b(b) {}

    Kind kind;
    int action_a;
    int action_b;  // -1 for not_applicable
};

bool applicable(const GroundTask& task, const State& state, int action);

// Conservative pairwise rule: an effect assigning a variable mentioned in the
// other action's precondition or effect with a different value interferes.
bool interfere(const GroundAction& a, const GroundAction& b);

// Successor state under a (possibly parallel) step. Throws ApplyError.
State apply(const GroundTask& task, const State& state, std::span<const int> step);

struct PlanError {
    int step = 0;
    std::string reason;
};

// Independent transition-semantics oracle; shares no code with the encoder.
std::optional<PlanError> validate_plan(const GroundTask& task, const Plan& plan);

bool goal_satisfied(const GroundTask& task, const State& state);

}  // namespace planforge::task
