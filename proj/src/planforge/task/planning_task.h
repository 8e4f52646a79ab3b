#pragma once

#include <string>
#include <vector>

namespace planforge::task {

// Lifted task representation produced by the PDDL frontend. PDDL predicates
// become Boolean-valued fluent schemas; typing is compiled into per-parameter
// object-membership constraints, resolved during grounding.

struct Term {
    bool is_param = false;
    int index = 0;  // parameter position or object id

    bool operator==(const Term&) const = default;
};

struct SchemaAtom {
    int predicate = -1;
    std::vector<Term> args;

    bool operator==(const SchemaAtom&) const = default;
};

struct SchemaLiteral {
    SchemaAtom atom;
    bool positive = true;

    bool operator==(const SchemaLiteral&) const = default;
};

struct EqualityConstraint {
    Term lhs;
    Term rhs;
    bool must_equal = true;

    bool operator==(const EqualityConstraint&) const = default;
};

struct LiftedAction {
    std::string name;
    std::vector<int> param_types;  // static unary membership constraint per parameter
    std::vector<SchemaLiteral> precondition;
    std::vector<EqualityConstraint> equalities;
    std::vector<SchemaLiteral> effects;

    bool operator==(const LiftedAction&) const = default;
};

struct ObjectInfo {
    std::string name;
    int type = 0;

    bool operator==(const ObjectInfo&) const = default;
};

struct PredicateInfo {
    std::string name;
    std::vector<int> param_types;

    bool operator==(const PredicateInfo&) const = default;
};

struct GroundAtom {
    int predicate = -1;
    std::vector<int> args;  // object ids

    auto operator<=>(const GroundAtom&) const = default;
};

struct PlanningTask {
    std::string name;

    // Type 0 is always the root "object"; parent[0] == -1.
    std::vector<std::string> type_names;
    std::vector<int> type_parent;

    std::vector<ObjectInfo> objects;
    std::vector<PredicateInfo> predicates;
    std::vector<LiftedAction> actions;

    std::vector<GroundAtom> init;
    std::vector<std::pair<GroundAtom, bool>> goal;  // (atom, positive)

    bool is_subtype(int type, int super) const {
        while (type >= 0) {
            if (type == super)
                return true;
            type = type_parent[type];
        }
        return false;
    }

    std::vector<int> objects_of_type(int type) const {
        std::vector<int> result;
        for (size_t i = 0; i < objects.size(); ++i)
            if (is_subtype(objects[i].type, type))
                result.push_back(static_cast<int>(i));
        return result;
    }

    bool operator==(const PlanningTask&) const = default;
};

}  // namespace planforge::task
