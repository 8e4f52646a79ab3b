#pragma once

#include <string>

#include "planforge/pddl/ast.h"

namespace planforge::pddl {

// Canonical text renderers; parse(print(ast)) == ast. Mainly exercised by the
// round-trip tests and handy for debugging.
std::string print_domain(const DomainAst& domain);
std::string print_problem(const ProblemAst& problem);

}  // namespace planforge::pddl
