#pragma once

#include <string>
#include <vector>

#include "planforge/invariants/prove.h"
#include "planforge/task/ground_task.h"

namespace planforge::invariants {

// Brute-force soundness check of proven invariants against every reachable
// state window (single-action edges plus stutter steps). Any counterexample
// is a solver or encoding bug.
struct AuditResult {
    enum class Status { ok, counterexample_found, overflow };

    Status status = Status::ok;
    CandidateProperty violated;           // counterexample only
    std::vector<task::State> window;      // the violating state window
    std::string description;
};

AuditResult soundness_audit(const std::vector<ValidatedInvariant>& proven,
                            const task::GroundTask& task, size_t state_cap = 1000000);

}  // namespace planforge::invariants
