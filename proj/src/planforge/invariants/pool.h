#pragma once

#include <map>
#include <vector>

#include "planforge/invariants/candidate.h"
#include "planforge/invariants/prove.h"

namespace planforge::invariants {

// Candidate bookkeeping keyed by canonical (normalized, sorted) literal sets.
// pending, proven, and refuted are pairwise disjoint; proven is kept
// subsumption-reduced. Unknown candidates are retired after a bounded number
// of failed proof attempts.
class CandidatePool {
public:
    explicit CandidatePool(int retire_after = 3) : retire_after_(retire_after) {}

    // False if the candidate is already known (any set, or subsumed by a
    // proven invariant).
    bool add_pending(CandidateProperty property);

    void mark_proven(const CandidateProperty& property, Certificate certificate);
    void mark_refuted(const CandidateProperty& property);
    // Returns true if the candidate was retired by this attempt.
    bool mark_unknown(const CandidateProperty& property);

    std::vector<CandidateProperty> pending() const;
    std::vector<ValidatedInvariant> proven() const;
    std::vector<CandidateProperty> proven_properties() const;
    std::vector<CandidateProperty> refuted() const;

    size_t pending_count() const { return pending_.size(); }
    size_t proven_count() const { return proven_.size(); }
    size_t refuted_count() const { return refuted_.size(); }
    size_t retired_count() const { return retired_; }
    size_t known_count() const {
        return pending_.size() + proven_.size() + refuted_.size() + retired_;
    }

    bool disjoint() const;  // sanity check used by tests

private:
    using Key = std::vector<CandidateLiteral>;

    struct PendingEntry {
        CandidateProperty property;
        int attempts = 0;
    };

    int retire_after_;
    std::map<Key, PendingEntry> pending_;
    std::map<Key, ValidatedInvariant> proven_;
    std::map<Key, CandidateProperty> refuted_;
    std::map<Key, char> retired_keys_;
    size_t retired_ = 0;
};

}  // namespace planforge::invariants
