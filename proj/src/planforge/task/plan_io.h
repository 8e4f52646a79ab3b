#pragma once

#include <string>
#include <string_view>

#include "planforge/task/ground_task.h"

namespace planforge::task {

struct PlanParseError : Error {
    using Error::Error;
};

// IPC-style plan text: one step per line, "(op a b)" for sequential steps or
// several groups for a parallel step, terminated by "; cost = N". Empty steps
// are not written.
std::string write_plan(const GroundTask& task, const Plan& plan);
Plan read_plan(const GroundTask& task, std::string_view text);

}  // namespace planforge::task
