#include "planforge/invariants/report_io.h"

#include <map>
#include <sstream>

namespace planforge::invariants {

namespace {

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

class Scanner {
public:
    Scanner(std::string_view text, int line) : text_(text), line_(line) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    bool eat(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    bool eat_word(std::string_view word) {
        skip_spaces();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::string quoted() {
        expect('"');
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
                ++pos_;
            out += text_[pos_++];
        }
        if (pos_ >= text_.size())
            fail("unterminated quoted name");
        ++pos_;
        return out;
    }

    int integer() {
        skip_spaces();
        size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-')
            ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }

    [[noreturn]] void fail(const std::string& message) {
        throw ReportParseError("invariant report line " + std::to_string(line_) + ": " +
                               message);
    }

private:
    std::string_view text_;
    size_t pos_ = 0;
    int line_;
};

}  // namespace

std::string write_invariants(const std::vector<ValidatedInvariant>& proven,
                             const task::GroundTask& task) {
    std::ostringstream out;
    out << "# planforge invariant report v1\n";
    out << "# task: " << task.name << "\n";
    out << "# proven: " << proven.size() << "\n";
    for (const ValidatedInvariant& inv : proven) {
        char fingerprint[32];
        std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                      static_cast<unsigned long long>(inv.proof.step_fingerprint));
        out << "# origin=" << (inv.property.origin.instance.empty()
                                   ? std::string("-")
                                   : inv.property.origin.instance)
            << " solve=" << inv.property.origin.solve_id
            << " base_h=" << inv.proof.base_horizon << " step_fp=" << fingerprint
            << " seed=" << inv.proof.seed << "\n";
        out << "degree=" << inv.property.degree() << " : ";
        bool first = true;
        for (const CandidateLiteral& lit : inv.property.literals) {
            if (!first)
                out << ", ";
            first = false;
            out << (lit.positive ? '+' : '-');
            if (lit.kind == CandidateLiteral::Kind::holds) {
                const task::StateVariable& var = task.variables[lit.a];
                out << "holds(" << quote(var.name) << "=" << quote(var.value_names[lit.b])
                    << " @" << lit.offset << ")";
            } else {
                out << "occurs(" << quote(task.actions[lit.a].name) << " @" << lit.offset
                    << ")";
            }
        }
        out << "\n";
    }
    return out.str();
}

ImportResult read_invariants(std::string_view text, const task::GroundTask& task) {
    std::map<std::string, int> var_by_name;
    for (const task::StateVariable& var : task.variables)
        var_by_name[var.name] = var.id;
    std::map<std::string, int> action_by_name;
    for (const task::GroundAction& action : task.actions)
        action_by_name[action.name] = action.id;

    ImportResult result;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        Scanner scan(line, line_number);
        if (!scan.eat_word("degree="))
            scan.fail("expected 'degree='");
        scan.integer();  // informational; recomputed from the literals
        scan.expect(':');

        CandidateProperty property;
        bool known = true;
        for (;;) {
            bool positive;
            if (scan.eat('+'))
                positive = true;
            else if (scan.eat('-'))
                positive = false;
            else
                scan.fail("expected '+' or '-' literal polarity");

            CandidateLiteral lit;
            lit.positive = positive;
            if (scan.eat_word("holds(")) {
                lit.kind = CandidateLiteral::Kind::holds;
                std::string var_name = scan.quoted();
                scan.expect('=');
                std::string value_name = scan.quoted();
                if (!scan.eat_word("@"))
                    scan.fail("expected '@offset'");
                lit.offset = scan.integer();
                scan.expect(')');
                auto var_it = var_by_name.find(var_name);
                if (var_it == var_by_name.end()) {
                    known = false;
                } else {
                    lit.a = var_it->second;
                    const auto& names = task.variables[lit.a].value_names;
                    int value = -1;
                    for (size_t i = 0; i < names.size(); ++i)
                        if (names[i] == value_name)
                            value = static_cast<int>(i);
                    if (value < 0)
                        known = false;
                    else
                        lit.b = value;
                }
            } else if (scan.eat_word("occurs(")) {
                lit.kind = CandidateLiteral::Kind::occurs;
                std::string action_name = scan.quoted();
                if (!scan.eat_word("@"))
                    scan.fail("expected '@offset'");
                lit.offset = scan.integer();
                scan.expect(')');
                auto action_it = action_by_name.find(action_name);
                if (action_it == action_by_name.end())
                    known = false;
                else
                    lit.a = action_it->second;
            } else {
                scan.fail("expected 'holds(' or 'occurs('");
            }
            property.literals.push_back(lit);
            if (!scan.eat(','))
                break;
        }
        if (!scan.at_end())
            scan.fail("trailing text after invariant");

        if (!known) {
            ++result.skipped;
            continue;
        }
        property.normalize();
        property.origin.instance = "imported";
        result.candidates.push_back(std::move(property));
    }
    return result;
}

}  // namespace planforge::invariants
