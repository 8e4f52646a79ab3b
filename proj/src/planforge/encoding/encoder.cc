#include "planforge/encoding/encoder.h"

#include <algorithm>

#include "planforge/task/transition.h"

namespace planforge::encoding {

using task::GroundAction;
using task::GroundTask;
using task::VarValue;

CnfProgram encode(const GroundTask& task, int horizon, const EncodeOptions& options) {
    CnfProgram program;
    program.horizon = horizon;
    program.semantics = options.semantics;
    program.num_vars = static_cast<int>(task.variables.size());
    program.num_actions = static_cast<int>(task.actions.size());
    program.value_offset.resize(task.variables.size());
    int offset = 0;
    for (size_t v = 0; v < task.variables.size(); ++v) {
        program.value_offset[v] = offset;
        offset += task.variables[v].domain_size;
    }
    program.values_per_time = offset;

    auto& clauses = program.clauses;
    const int n = horizon;

    // (1) initial state units at t = 0.
    if (options.include_init)
        for (size_t v = 0; v < task.variables.size(); ++v)
            clauses.push_back({program.holds_literal(static_cast<int>(v),
                                                     task.initial_state[v], 0)});

    // (2) goal units at t = n.
    if (options.include_goal)
        for (const VarValue& vv : task.goal)
            clauses.push_back({program.holds_literal(vv.var, vv.value, n)});

    // (3) exactly one value per variable and time.
    for (int t = 0; t <= n; ++t) {
        for (size_t v = 0; v < task.variables.size(); ++v) {
            int dom = task.variables[v].domain_size;
            std::vector<int> at_least_one;
            for (int d = 0; d < dom; ++d)
                at_least_one.push_back(program.holds_literal(static_cast<int>(v), d, t));
            clauses.push_back(std::move(at_least_one));
            for (int d1 = 0; d1 < dom; ++d1)
                for (int d2 = d1 + 1; d2 < dom; ++d2)
                    clauses.push_back(
                        {program.holds_literal(static_cast<int>(v), d1, t, false),
                         program.holds_literal(static_cast<int>(v), d2, t, false)});
        }
    }

    // (4) occurs(a, t) implies the precondition at t.
    // (5) occurs(a, t) implies the effect at t + 1.
    for (int t = 0; t < n; ++t) {
        for (const GroundAction& action : task.actions) {
            int not_occurs = program.occurs_literal(action.id, t, false);
            for (const VarValue& vv : action.precondition)
                clauses.push_back({not_occurs, program.holds_literal(vv.var, vv.value, t)});
            for (const VarValue& vv : action.effect)
                clauses.push_back({not_occurs, program.holds_literal(vv.var, vv.value, t + 1)});
        }
    }

    // (6) explanatory frame axioms: a value becoming true is caused by some
    // occurring action with that effect.
    std::vector<std::vector<std::vector<int>>> causes(task.variables.size());
    for (size_t v = 0; v < task.variables.size(); ++v)
        causes[v].resize(task.variables[v].domain_size);
    for (const GroundAction& action : task.actions)
        for (const VarValue& vv : action.effect)
            causes[vv.var][vv.value].push_back(action.id);
    for (int t = 0; t < n; ++t) {
        for (size_t v = 0; v < task.variables.size(); ++v) {
            for (int d = 0; d < task.variables[v].domain_size; ++d) {
                std::vector<int> clause{
                    program.holds_literal(static_cast<int>(v), d, t + 1, false),
                    program.holds_literal(static_cast<int>(v), d, t)};
                for (int action : causes[v][d])
                    clause.push_back(program.occurs_literal(action, t));
                clauses.push_back(std::move(clause));
            }
        }
    }

    // (7) step mutexes: all pairs under sequential semantics, interfering
    // pairs under forall-parallel semantics.
    std::vector<std::pair<int, int>> mutex_pairs;
    for (size_t i = 0; i < task.actions.size(); ++i)
        for (size_t j = i + 1; j < task.actions.size(); ++j)
            if (options.semantics == Semantics::sequential ||
                task::interfere(task.actions[i], task.actions[j]))
                mutex_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (int t = 0; t < n; ++t)
        for (const auto& [a, b] : mutex_pairs)
            clauses.push_back({program.occurs_literal(a, t, false),
                               program.occurs_literal(b, t, false)});

    // (8) at least one action per step.
    if (options.no_idle) {
        for (int t = 0; t < n; ++t) {
            std::vector<int> some_action;
            for (size_t a = 0; a < task.actions.size(); ++a)
                some_action.push_back(program.occurs_literal(static_cast<int>(a), t));
            clauses.push_back(std::move(some_action));
        }
    }

    // (9) mutex groups from the task, at every time point.
    for (int t = 0; t <= n; ++t)
        for (const auto& group : task.mutex_groups)
            for (size_t i = 0; i < group.size(); ++i)
                for (size_t j = i + 1; j < group.size(); ++j) {
                    if (group[i].var == group[j].var)
                        continue;  // same-variable pairs are covered by (3)
                    clauses.push_back(
                        {program.holds_literal(group[i].var, group[i].value, t, false),
                         program.holds_literal(group[j].var, group[j].value, t, false)});
                }

    return program;
}

namespace {

// Valid base shifts keep every literal inside the horizon: holds literals may
// sit at time n, occurs literals only at n - 1.
int max_base_shift(const CnfProgram& program, const invariants::CandidateProperty& inv) {
    int max_base = program.horizon;
    for (const invariants::CandidateLiteral& lit : inv.literals) {
        int limit = lit.kind == invariants::CandidateLiteral::Kind::occurs
                        ? program.horizon - 1 - lit.offset
                        : program.horizon - lit.offset;
        max_base = std::min(max_base, limit);
    }
    return max_base;
}

}  // namespace

InjectionReport add_invariant_constraints(
    CnfProgram& program, const std::vector<invariants::CandidateProperty>& invariants_list) {
    InjectionReport report;
    for (const invariants::CandidateProperty& inv : invariants_list) {
        int max_base = max_base_shift(program, inv);
        if (max_base < 0) {
            report.skipped.push_back(inv);
            continue;
        }
        for (int base = 0; base <= max_base; ++base) {
            std::vector<int> clause;
            clause.reserve(inv.literals.size());
            for (const invariants::CandidateLiteral& lit : inv.literals) {
                int t = base + lit.offset;
                if (lit.kind == invariants::CandidateLiteral::Kind::holds)
                    clause.push_back(program.holds_literal(lit.a, lit.b, t, lit.positive));
                else
                    clause.push_back(program.occurs_literal(lit.a, t, lit.positive));
            }
            if (program.append_unique(std::move(clause)))
                ++report.injected_clauses;
        }
    }
    return report;
}

task::Plan decode_plan(const CnfProgram& program, const std::vector<bool>& model) {
    task::Plan plan;
    plan.steps.resize(program.horizon);
    for (int t = 0; t < program.horizon; ++t)
        for (int a = 0; a < program.num_actions; ++a)
            if (model[program.occurs_index(a, t)])
                plan.steps[t].push_back(a);
    return plan;
}

}  // namespace planforge::encoding
