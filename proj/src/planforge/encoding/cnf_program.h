#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "planforge/task/ground_task.h"

namespace planforge::encoding {

enum class Semantics { sequential, forall_parallel };

struct TimedAtom {
    enum class Kind { holds, occurs };

    Kind kind = Kind::holds;
    int a = 0;     // variable id (holds) or action id (occurs)
    int b = 0;     // value id (holds only)
    int time = 0;  // 0..n for holds, 0..n-1 for occurs

    bool operator==(const TimedAtom&) const = default;
};

// Clause literals use the DIMACS convention over a dense atom index:
// +-(atom_index + 1). The atom table is a computed bijection, laid out as all
// holds atoms (time-major) followed by all occurs atoms.
struct CnfProgram {
    int horizon = 0;
    Semantics semantics = Semantics::sequential;

    int num_vars = 0;     // state variables
    int num_actions = 0;
    std::vector<int> value_offset;  // per state variable
    int values_per_time = 0;

    std::vector<std::vector<int>> clauses;

    int atom_count() const {
        return values_per_time * (horizon + 1) + num_actions * horizon;
    }

    int holds_index(int var, int value, int time) const {
        return time * values_per_time + value_offset[var] + value;
    }
    int occurs_index(int action, int time) const {
        return values_per_time * (horizon + 1) + time * num_actions + action;
    }

    TimedAtom atom(int index) const;
    // DIMACS literal helpers (1-based).
    int holds_literal(int var, int value, int time, bool positive = true) const {
        return (positive ? 1 : -1) * (holds_index(var, value, time) + 1);
    }
    int occurs_literal(int action, int time, bool positive = true) const {
        return (positive ? 1 : -1) * (occurs_index(action, time) + 1);
    }

    // Appends a clause unless an identical one (up to literal order) exists.
    // Returns true if appended. The dedup index is built lazily.
    bool append_unique(std::vector<int> clause);

private:
    struct ClauseHash {
        size_t operator()(const std::vector<int>& lits) const {
            size_t h = 1469598103934665603ull;
            for (int lit : lits) {
                h ^= static_cast<size_t>(static_cast<uint32_t>(lit));
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<int>, ClauseHash> canonical_;
    bool canonical_built_ = false;
};

}  // namespace planforge::encoding
