#include "planforge/pddl/lexer.h"

#include <cctype>

namespace planforge::pddl {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '=';
}

char fold(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

TokenStream tokenize(std::string_view source) {
    TokenStream tokens;
    int line = 1;
    int column = 1;
    size_t i = 0;
    const size_t n = source.size();

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };

    while (i < n) {
        char c = source[i];
        if (c == ';') {
            while (i < n && source[i] != '\n')
                advance(source[i]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            continue;
        }
        if (c == '(') {
            tokens.push_back({Token::Kind::lparen, "(", line, column});
            advance(c);
            continue;
        }
        if (c == ')') {
            tokens.push_back({Token::Kind::rparen, ")", line, column});
            advance(c);
            continue;
        }
        if (c == '?' || c == ':') {
            int start_line = line;
            int start_col = column;
            std::string text(1, c);
            advance(c);
            while (i < n && is_name_char(source[i])) {
                text += fold(source[i]);
                advance(source[i]);
            }
            if (text.size() == 1)
                throw LexError({start_line, start_col},
                               std::string("dangling '") + text + "' with no name");
            tokens.push_back({c == '?' ? Token::Kind::variable : Token::Kind::keyword,
                              std::move(text), start_line, start_col});
            continue;
        }
        if (is_name_char(c)) {
            int start_line = line;
            int start_col = column;
            std::string text;
            while (i < n && is_name_char(source[i])) {
                text += fold(source[i]);
                advance(source[i]);
            }
            tokens.push_back({Token::Kind::symbol, std::move(text), start_line, start_col});
            continue;
        }
        throw LexError({line, column}, std::string("illegal character '") + c + "'");
    }
    return tokens;
}

}  // namespace planforge::pddl
