#include "planforge/task/transition.h"

namespace planforge::task {

bool applicable(const GroundTask& task, const State& state, int action) {
    for (const VarValue& vv : task.actions[action].precondition)
        if (state[vv.var] != vv.value)
            return false;
    return true;
}

bool interfere(const GroundAction& a, const GroundAction& b) {
    for (const VarValue& eff : a.effect) {
        const int* pre = b.precondition_on(eff.var);
        if (pre != nullptr && *pre != eff.value)
            return true;
        const int* other = b.effect_on(eff.var);
        if (other != nullptr && *other != eff.value)
            return true;
    }
    for (const VarValue& eff : b.effect) {
        const int* pre = a.precondition_on(eff.var);
        if (pre != nullptr && *pre != eff.value)
            return true;
    }
    return false;
}

State apply(const GroundTask& task, const State& state, std::span<const int> step) {
    for (int action : step)
        if (!applicable(task, state, action))
            throw ApplyError(ApplyError::Kind::not_applicable, action, -1,
                             "action " + task.actions[action].name + " is not applicable");
    for (size_t i = 0; i < step.size(); ++i)
        for (size_t j = i + 1; j < step.size(); ++j)
            if (interfere(task.actions[step[i]], task.actions[step[j]]))
                throw ApplyError(ApplyError::Kind::interference, step[i], step[j],
                                 "actions " + task.actions[step[i]].name + " and " +
                                     task.actions[step[j]].name + " interfere");
    State next = state;
    for (int action : step)
        for (const VarValue& vv : task.actions[action].effect)
            next[vv.var] = vv.value;
    return next;
}

bool goal_satisfied(const GroundTask& task, const State& state) {
    for (const VarValue& vv : task.goal)
        if (state[vv.var] != vv.value)
            return false;
    return true;
}

std::optional<PlanError> validate_plan(const GroundTask& task, const Plan& plan) {
    State state = task.initial_state;
    for (size_t i = 0; i < plan.steps.size(); ++i) {
        for (int action : plan.steps[i])
            if (action < 0 || action >= static_cast<int>(task.actions.size()))
                return PlanError{static_cast<int>(i), "action id out of range"};
        try {
            state = apply(task, state, plan.steps[i]);
        } catch (const ApplyError& e) {
            return PlanError{static_cast<int>(i), e.what()};
        }
    }
    if (!goal_satisfied(task, state))
        return PlanError{static_cast<int>(plan.steps.size()), "goal unsatisfied at plan end"};
    return std::nullopt;
}

}  // namespace planforge::task
