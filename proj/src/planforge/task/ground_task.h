#pragma once

#include <string>
#include <vector>

#include "planforge/pddl/errors.h"

namespace planforge::task {

struct StateVariable {
    int id = 0;
    std::string name;
    int domain_size = 2;
    std::vector<std::string> value_names;

    bool operator==(const StateVariable&) const = default;
};

struct VarValue {
    int var = 0;
    int value = 0;

    auto operator<=>(const VarValue&) const = default;
};

// Partial assignments are kept sorted by variable, one entry per variable.
struct GroundAction {
    int id = 0;
    std::string name;  // "(op arg1 ... argk)"
    std::vector<VarValue> precondition;
    std::vector<VarValue> effect;  // nonempty

    const int* precondition_on(int var) const {
        for (const VarValue& vv : precondition)
            if (vv.var == var)
                return &vv.value;
        return nullptr;
    }
    const int* effect_on(int var) const {
        for (const VarValue& vv : effect)
            if (vv.var == var)
                return &vv.value;
        return nullptr;
    }

    bool operator==(const GroundAction&) const = default;
};

using State = std::vector<int>;  // one value per variable

struct GroundTask {
    std::string name;
    std::vector<StateVariable> variables;
    std::vector<GroundAction> actions;
    State initial_state;                          // total
    std::vector<VarValue> goal;                   // partial, sorted by var
    std::vector<std::vector<VarValue>> mutex_groups;

    // Throws Error if any structural invariant is violated.
    void check() const;

    bool operator==(const GroundTask&) const = default;
};

struct Plan {
    std::vector<std::vector<int>> steps;  // action ids; singletons under sequential semantics

    size_t action_count() const {
        size_t n = 0;
        for (const auto& step : steps)
            n += step.size();
        return n;
    }

    bool operator==(const Plan&) const = default;
};

struct GroundingExplosion : Error {
    using Error::Error;
};

}  // namespace planforge::task
