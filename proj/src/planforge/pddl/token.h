#pragma once

#include <string>
#include <vector>

namespace planforge::pddl {

struct Token {
    enum class Kind { lparen, rparen, symbol, variable, keyword };

    Kind kind;
    std::string text;  // includes the leading "?" or ":" sigil
    int line = 0;      // 1-based
    int column = 0;    // 1-based

    bool operator==(const Token& other) const {
        return kind == other.kind && text == other.text;  // positions ignored
    }
};

using TokenStream = std::vector<Token>;

}  // namespace planforge::pddl
