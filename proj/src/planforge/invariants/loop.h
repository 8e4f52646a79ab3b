#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planforge/encoding/cnf_program.h"
#include "planforge/invariants/pool.h"
#include "planforge/sat/solver.h"
#include "planforge/task/ground_task.h"

namespace planforge::invariants {

struct LoopBudget {
    double wall_seconds = 0;        // 0 = unlimited; forfeit determinism if it triggers
    uint64_t total_conflicts = 0;   // 0 = unlimited, across all planning solves
    size_t max_candidates = 4096;   // cap on distinct candidates ever admitted
    uint64_t proof_conflict_budget = 20000;
    int retire_after = 3;
};

struct LoopConfig {
    encoding::Semantics semantics = encoding::Semantics::sequential;
    int horizon_start = 0;
    int horizon_step = 1;
    int horizon_max = 50;
    bool no_idle = true;
    uint64_t seed = 1;
    int export_max_size = 10;
    int export_max_lbd = 4;
    int max_candidate_window = 4;  // proof queries grow with the window
    int threads = 0;               // 0 = PLANFORGE_THREADS or a small default
    LoopBudget budget;
    std::vector<CandidateProperty> warm_start;  // imported candidates, re-proven here
};

struct HorizonRecord {
    int horizon = 0;
    sat::SolveStatus verdict = sat::SolveStatus::unsat;
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    size_t learned_exported = 0;
    size_t candidates_proven = 0;
    size_t candidates_refuted = 0;
    size_t candidates_unknown = 0;
    double wall_ms = 0;
};

struct LoopResult {
    CandidatePool pool;
    std::optional<task::Plan> plan;
    int plan_horizon = -1;
    std::vector<HorizonRecord> records;
    bool budget_exhausted = false;
};

// The feedback loop: encode with proven invariants injected, solve, export
// learned clauses, generalize them over the temporal domain, prove pending
// candidates (concurrently), raise the horizon on UNSAT, repeat.
LoopResult feedback_loop(const task::GroundTask& task, const LoopConfig& config);

}  // namespace planforge::invariants
