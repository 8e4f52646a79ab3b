#pragma once

#include <cstdint>
#include <string>

#include "planforge/encoding/cnf_program.h"
#include "planforge/invariants/loop.h"

namespace planforge::driver {

struct RunConfig {
    // Input: a PDDL domain/problem pair xor a SAS file.
    std::string domain_path;
    std::string problem_path;
    std::string sas_path;

    encoding::Semantics semantics = encoding::Semantics::sequential;

    int horizon_start = 0;
    int horizon_step = 1;
    int horizon_max = 50;

    bool no_idle = true;
    bool invariants_enabled = true;

    invariants::LoopBudget budget;
    uint64_t seed = 1;

    std::string invariants_in_path;
    std::string invariants_out_path;
    std::string plan_out_path;
    std::string stats_out_path;
    std::string emit_cnf_path;

    // When false, wall-clock fields in the stats file are zeroed so that
    // identical config + seed yields byte-identical output.
    bool stats_timing = true;
};

enum class ExitStatus : int {
    plan_found = 0,
    no_plan_within_horizon = 10,
    input_error = 20,
    internal_validation_failure = 30,
};

}  // namespace planforge::driver
