#include "planforge/encoding/cnf_program.h"

#include <algorithm>

namespace planforge::encoding {

TimedAtom CnfProgram::atom(int index) const {
    TimedAtom result;
    int holds_count = values_per_time * (horizon + 1);
    if (index < holds_count) {
        result.kind = TimedAtom::Kind::holds;
        result.time = index / values_per_time;
        int within = index % values_per_time;
        // value_offset is sorted; find the variable owning this slot.
        int var = static_cast<int>(std::upper_bound(value_offset.begin(), value_offset.end(),
                                                    within) -
                                   value_offset.begin()) -
                  1;
        result.a = var;
        result.b = within - value_offset[var];
        return result;
    }
    int rest = index - holds_count;
    result.kind = TimedAtom::Kind::occurs;
    result.time = rest / num_actions;
    result.a = rest % num_actions;
    result.b = 0;
    return result;
}

bool CnfProgram::append_unique(std::vector<int> clause) {
    if (!canonical_built_) {
        for (const auto& existing : clauses) {
            std::vector<int> sorted = existing;
            std::sort(sorted.begin(), sorted.end());
            canonical_.insert(std::move(sorted));
        }
        canonical_built_ = true;
    }
    std::vector<int> sorted = clause;
    std::sort(sorted.begin(), sorted.end());
    if (!canonical_.insert(std::move(sorted)).second)
        return false;
    clauses.push_back(std::move(clause));
    return true;
}

}  // namespace planforge::encoding
