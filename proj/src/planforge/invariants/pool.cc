#include "planforge/invariants/pool.h"

#include <algorithm>

namespace planforge::invariants {

bool CandidatePool::add_pending(CandidateProperty property) {
    property.normalize();
    Key key = property.literals;  // copied: property is moved below
    if (pending_.count(key) || proven_.count(key) || refuted_.count(key) ||
        retired_keys_.count(key))
        return false;
    for (const auto& [_, inv] : proven_)
        if (subsumes(inv.property, property))
            return false;
    pending_.emplace(std::move(key), PendingEntry{std::move(property), 0});
    return true;
}

void CandidatePool::mark_proven(const CandidateProperty& property, Certificate certificate) {
    pending_.erase(property.literals);
    for (const auto& [_, inv] : proven_)
        if (subsumes(inv.property, property))
            return;  // a stronger invariant is already proven
    for (auto it = proven_.begin(); it != proven_.end();)
        if (subsumes(property, it->second.property))
            it = proven_.erase(it);
        else
            ++it;
    proven_.emplace(property.literals,
                    ValidatedInvariant{property, std::move(certificate)});
}

void CandidatePool::mark_refuted(const CandidateProperty& property) {
    pending_.erase(property.literals);
    refuted_.emplace(property.literals, property);
}

bool CandidatePool::mark_unknown(const CandidateProperty& property) {
    auto it = pending_.find(property.literals);
    if (it == pending_.end())
        return false;
    if (++it->second.attempts >= retire_after_) {
        retired_keys_.emplace(it->first, 1);
        pending_.erase(it);
        ++retired_;
        return true;
    }
    return false;
}

std::vector<CandidateProperty> CandidatePool::pending() const {
    std::vector<CandidateProperty> result;
    for (const auto& [_, entry] : pending_)
        result.push_back(entry.property);
    return result;
}

std::vector<ValidatedInvariant> CandidatePool::proven() const {
    std::vector<ValidatedInvariant> result;
    for (const auto& [_, inv] : proven_)
        result.push_back(inv);
    return result;
}

std::vector<CandidateProperty> CandidatePool::proven_properties() const {
    std::vector<CandidateProperty> result;
    for (const auto& [_, inv] : proven_)
        result.push_back(inv.property);
    return result;
}

std::vector<CandidateProperty> CandidatePool::refuted() const {
    std::vector<CandidateProperty> result;
    for (const auto& [_, property] : refuted_)
        result.push_back(property);
    return result;
}

bool CandidatePool::disjoint() const {
    for (const auto& [key, _] : pending_)
        if (proven_.count(key) || refuted_.count(key))
            return false;
    for (const auto& [key, _] : proven_)
        if (refuted_.count(key))
            return false;
    return true;
}

}  // namespace planforge::invariants
