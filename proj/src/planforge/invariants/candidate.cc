#include "planforge/invariants/candidate.h"

#include <algorithm>
#include <sstream>

namespace planforge::invariants {

int CandidateProperty::degree() const {
    int max_offset = 0;
    for (const CandidateLiteral& lit : literals)
        max_offset = std::max(max_offset, lit.offset);
    return max_offset + 1;
}

int CandidateProperty::window() const {
    int span = 1;
    for (const CandidateLiteral& lit : literals) {
        int reach = lit.offset + (lit.kind == CandidateLiteral::Kind::occurs ? 2 : 1);
        span = std::max(span, reach);
    }
    return span;
}

void CandidateProperty::normalize() {
    if (literals.empty())
        return;
    int min_offset = literals[0].offset;
    for (const CandidateLiteral& lit : literals)
        min_offset = std::min(min_offset, lit.offset);
    for (CandidateLiteral& lit : literals)
        lit.offset -= min_offset;
    std::sort(literals.begin(), literals.end());
    literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
}

bool subsumes(const CandidateProperty& a, const CandidateProperty& b) {
    if (a.literals.size() > b.literals.size())
        return false;
    int max_shift = b.degree() - a.degree();
    for (int shift = 0; shift <= max_shift; ++shift) {
        bool all_found = true;
        for (CandidateLiteral lit : a.literals) {
            lit.offset += shift;
            if (!std::binary_search(b.literals.begin(), b.literals.end(), lit)) {
                all_found = false;
                break;
            }
        }
        if (all_found)
            return true;
    }
    return false;
}

std::string to_string(const CandidateProperty& property) {
    std::ostringstream out;
    out << "degree=" << property.degree() << " :";
    bool first = true;
    for (const CandidateLiteral& lit : property.literals) {
        out << (first ? " " : ", ");
        first = false;
        out << (lit.positive ? '+' : '-');
        if (lit.kind == CandidateLiteral::Kind::holds)
            out << "holds(v" << lit.a << "=" << lit.b << " @" << lit.offset << ")";
        else
            out << "occurs(a" << lit.a << " @" << lit.offset << ")";
    }
    return out.str();
}

}  // namespace planforge::invariants
