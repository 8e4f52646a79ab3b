#pragma once

#include "planforge/pddl/ast.h"
#include "planforge/task/planning_task.h"

namespace planforge::pddl {

// Lowers checked ASTs into the lifted task IR. Equality atoms become
// grounding-time constraints; every predicate becomes a Boolean fluent schema.
task::PlanningTask normalize(const DomainAst& domain, const ProblemAst& problem);

}  // namespace planforge::pddl
