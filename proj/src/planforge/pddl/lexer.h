#pragma once

#include <string_view>

#include "planforge/pddl/errors.h"
#include "planforge/pddl/token.h"

namespace planforge::pddl {

// Tokenizes PDDL text. Case is folded to lowercase, ";" comments are
// skipped. Throws LexError on illegal characters.
TokenStream tokenize(std::string_view source);

}  // namespace planforge::pddl
