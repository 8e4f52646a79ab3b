#include "support/cnf_oracle.h"

#include <cstdint>
#include <stdexcept>

namespace planforge::test {

namespace {

// Truth table of a variable over one block of 64 assignments. Assignment i
// within a block sets variable v (0-based) to bit (i >> v) for v < 6; higher
// variables are constant per block, taken from the block index.
uint64_t variable_mask(int var0, uint64_t block) {
    static constexpr uint64_t kPatterns[6] = {
        0xaaaaaaaaaaaaaaaaull,  // bit 0: 0101...
        0xccccccccccccccccull,
        0xf0f0f0f0f0f0f0f0ull,
        0xff00ff00ff00ff00ull,
        0xffff0000ffff0000ull,
        0xffffffff00000000ull,
    };
    if (var0 < 6)
        return kPatterns[var0];
    return (block >> (var0 - 6)) & 1 ? ~0ull : 0ull;
}

}  // namespace

bool enumeration_satisfiable(int num_vars, const std::vector<std::vector<int>>& clauses) {
    if (num_vars > 24)
        throw std::invalid_argument("enumeration oracle limited to 24 variables");
    uint64_t blocks = num_vars <= 6 ? 1 : (1ull << (num_vars - 6));
    uint64_t tail_mask = num_vars >= 6 ? ~0ull : (1ull << (1 << num_vars)) - 1;

    for (uint64_t block = 0; block < blocks; ++block) {
        uint64_t alive = tail_mask;
        for (const auto& clause : clauses) {
            uint64_t clause_mask = 0;
            for (int lit : clause) {
                uint64_t var_mask = variable_mask(std::abs(lit) - 1, block);
                clause_mask |= lit > 0 ? var_mask : ~var_mask;
            }
            alive &= clause_mask;
            if (alive == 0)
                break;
        }
        if (alive != 0)
            return true;
    }
    return false;
}

bool assignment_satisfies(const std::vector<bool>& assignment,
                          const std::vector<std::vector<int>>& clauses) {
    for (const auto& clause : clauses) {
        bool satisfied = false;
        for (int lit : clause) {
            bool value = assignment[std::abs(lit) - 1];
            if ((lit > 0) == value) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

}  // namespace planforge::test
