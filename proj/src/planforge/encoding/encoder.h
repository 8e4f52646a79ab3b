#pragma once

#include <vector>

#include "planforge/encoding/cnf_program.h"
#include "planforge/invariants/candidate.h"
#include "planforge/task/ground_task.h"

namespace planforge::encoding {

struct EncodeOptions {
    Semantics semantics = Semantics::sequential;
    // At-least-one action per step; keeps "SAT at horizon n" aligned with
    // "makespan exactly n is reachable".
    bool no_idle = true;
    // The proof queries drop these to quantify over prefixes/arbitrary states.
    bool include_init = true;
    bool include_goal = true;
};

// Bounded-horizon clause translation: initial/goal units, exactly-one value
// per variable and time, precondition/effect clauses, explanatory frame
// axioms, step mutexes per semantics, optional no-idling, mutex groups.
CnfProgram encode(const task::GroundTask& task, int horizon, const EncodeOptions& options = {});

struct InjectionReport {
    int injected_clauses = 0;
    // DegreeExceedsHorizon: invariants whose time window does not fit.
    std::vector<invariants::CandidateProperty> skipped;
};

// Appends every fitting time shift of each invariant clause, deduplicating
// against existing clauses. Skipped invariants are reported, not fatal.
InjectionReport add_invariant_constraints(
    CnfProgram& program, const std::vector<invariants::CandidateProperty>& invariants);

// Step t of the plan collects the actions with occurs(a, t) true in model.
task::Plan decode_plan(const CnfProgram& program, const std::vector<bool>& model);

}  // namespace planforge::encoding
