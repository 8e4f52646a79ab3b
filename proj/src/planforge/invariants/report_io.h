#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "planforge/invariants/prove.h"
#include "planforge/task/ground_task.h"

namespace planforge::invariants {

struct ReportParseError : Error {
    using Error::Error;
};

// Text report: provenance comment lines ("# ..."), then one invariant per
// line in canonical form, e.g.
//   degree=2 : -holds("(at b1 rooma)"="true" @0), +occurs("(pick b1)" @1)
// Names are quoted so reports written on one instance can be re-read on
// another instance of the same domain; unknown names are skipped on import.
std::string write_invariants(const std::vector<ValidatedInvariant>& proven,
                             const task::GroundTask& task);

struct ImportResult {
    std::vector<CandidateProperty> candidates;
    size_t skipped = 0;  // invariants naming unknown variables/values/actions
};

ImportResult read_invariants(std::string_view text, const task::GroundTask& task);

}  // namespace planforge::invariants
