#include "planforge/task/ground_task.h"

namespace planforge::task {

namespace {

void check_assignment(const GroundTask& task, const std::vector<VarValue>& assignment,
                      const std::string& what) {
    int last_var = -1;
    for (const VarValue& vv : assignment) {
        if (vv.var < 0 || vv.var >= static_cast<int>(task.variables.size()))
            throw Error(what + ": variable index out of range");
        if (vv.value < 0 || vv.value >= task.variables[vv.var].domain_size)
            throw Error(what + ": value index out of range");
        if (vv.var <= last_var)
            throw Error(what + ": variables not strictly sorted");
        last_var = vv.var;
    }
}

}  // namespace

void GroundTask::check() const {
    for (size_t i = 0; i < variables.size(); ++i) {
        const StateVariable& v = variables[i];
        if (v.id != static_cast<int>(i))
            throw Error("variable ids not dense");
        if (v.domain_size < 2)
            throw Error("variable '" + v.name + "' has domain size < 2");
        if (static_cast<int>(v.value_names.size()) != v.domain_size)
            throw Error("variable '" + v.name + "' value name count mismatch");
    }
    if (initial_state.size() != variables.size())
        throw Error("initial state is not total");
    for (size_t v = 0; v < initial_state.size(); ++v)
        if (initial_state[v] < 0 || initial_state[v] >= variables[v].domain_size)
            throw Error("initial state value out of range");
    for (size_t i = 0; i < actions.size(); ++i) {
        const GroundAction& a = actions[i];
        if (a.id != static_cast<int>(i))
            throw Error("action ids not dense");
        check_assignment(*this, a.precondition, "precondition of " + a.name);
        check_assignment(*this, a.effect, "effect of " + a.name);
        if (a.effect.empty())
            throw Error("action " + a.name + " has empty effect");
    }
    check_assignment(*this, goal, "goal");
    for (const auto& group : mutex_groups)
        for (const VarValue& vv : group) {
            if (vv.var < 0 || vv.var >= static_cast<int>(variables.size()))
                throw Error("mutex group variable out of range");
            if (vv.value < 0 || vv.value >= variables[vv.var].domain_size)
                throw Error("mutex group value out of range");
        }
}

}  // namespace planforge::task
