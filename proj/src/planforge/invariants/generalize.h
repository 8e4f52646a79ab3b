#pragma once

#include <optional>

#include "planforge/encoding/cnf_program.h"
#include "planforge/invariants/candidate.h"
#include "planforge/sat/solver.h"
#include "planforge/task/ground_task.h"

namespace planforge::invariants {

// Lifts a learned clause to relative time offsets. Returns nullopt
// (NotGeneralizable) when a literal is an initial-state or goal unit
// artifact: holds literals at time 0 (forced by init) or at time n on a goal
// variable. Occurs literals are kept with their offsets.
std::optional<CandidateProperty> generalize(const sat::LearnedClause& clause,
                                            const encoding::CnfProgram& program,
                                            const task::GroundTask& task);

}  // namespace planforge::invariants
