#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "planforge/encoding/cnf_program.h"
#include "planforge/invariants/candidate.h"
#include "planforge/task/ground_task.h"

namespace planforge::invariants {

struct ProofConfig {
    uint64_t seed = 1;
    uint64_t conflict_budget = 20000;  // per query; exhaustion yields Unknown
    // Already-proven invariants injected into both queries (relative
    // induction); must only ever contain validated invariants.
    std::span<const CandidateProperty> support;
};

struct Certificate {
    int base_horizon = 0;  // horizon of the BASE query
    uint64_t step_fingerprint = 0;
    uint64_t seed = 0;
    std::vector<CandidateProperty> support;  // needed to replay the queries
};

// A refutation is a real execution prefix from the initial state whose final
// window violates the candidate.
struct Witness {
    std::vector<task::State> states;
    std::vector<std::vector<int>> steps;
};

struct ProveResult {
    enum class Status { proven, refuted, unknown };

    Status status = Status::unknown;
    Certificate certificate;  // proven only
    Witness witness;          // refuted only
};

// One-step induction via two solver queries over the forall-parallel
// transition relation (idling allowed, so proofs transfer to both semantics):
//   BASE: real init, no goal; assert the negated candidate at base time 0.
//   STEP: arbitrary constrained start (exactly-one + mutexes, no init);
//         hypothesize the candidate at base 0, assert its negation at base 1.
// Both UNSAT: proven. BASE SAT: refuted with a replayable witness. STEP SAT
// or budget exhausted: unknown (induction is incomplete).
ProveResult prove(const CandidateProperty& candidate, const task::GroundTask& task,
                  const ProofConfig& config);

struct ValidatedInvariant {
    CandidateProperty property;
    Certificate proof;
};

}  // namespace planforge::invariants
