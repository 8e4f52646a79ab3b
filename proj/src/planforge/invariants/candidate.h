#pragma once

#include <string>
#include <vector>

namespace planforge::invariants {

// One literal of a candidate property: a ground atom or action occurrence at
// a relative time offset. Candidates are disjunctions (clauses) conjectured
// to hold at every base time of every execution.
struct CandidateLiteral {
    enum class Kind { holds, occurs };

    Kind kind = Kind::holds;
    int a = 0;       // variable id (holds) or action id (occurs)
    int b = 0;       // value id (holds only)
    int offset = 0;  // relative time, >= 0
    bool positive = true;

    auto operator<=>(const CandidateLiteral&) const = default;
};

struct Origin {
    std::string instance;
    int solve_id = 0;

    bool operator==(const Origin&) const = default;
};

struct CandidateProperty {
    std::vector<CandidateLiteral> literals;  // sorted, offset-normalized (min offset 0)
    Origin origin;

    // Temporal span in offsets: max offset + 1.
    int degree() const;
    // Number of state time points the clause touches when placed at a base
    // time: occurs literals reach one state further than their offset.
    int window() const;

    void normalize();  // sort literals, shift offsets so the minimum is 0

    bool operator==(const CandidateProperty& other) const {
        return literals == other.literals;  // origin is provenance, not identity
    }
};

// True if `a` entails `b` by literal-set inclusion at some offset alignment.
bool subsumes(const CandidateProperty& a, const CandidateProperty& b);

std::string to_string(const CandidateProperty& property);

}  // namespace planforge::invariants
