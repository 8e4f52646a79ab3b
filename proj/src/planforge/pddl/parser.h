#pragma once

#include "planforge/pddl/ast.h"
#include "planforge/pddl/errors.h"
#include "planforge/pddl/token.h"

namespace planforge::pddl {

// Recursive-descent parsers for the STRIPS + :typing + :negative-preconditions
// + :equality fragment. Anything else is rejected with UnsupportedRequirement
// (well-formed but out of fragment) or ParseError (malformed).
DomainAst parse_domain(const TokenStream& tokens);
ProblemAst parse_problem(const TokenStream& tokens, const DomainAst& domain);

}  // namespace planforge::pddl
