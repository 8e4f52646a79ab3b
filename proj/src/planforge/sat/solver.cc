#include "planforge/sat/solver.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

namespace planforge::sat {

namespace {

constexpr double kVarDecay = 0.95;
constexpr double kClaDecay = 0.999;
constexpr double kRescaleLimit = 1e100;
constexpr int kRestartBase = 100;
constexpr uint64_t kFirstReduce = 2000;
constexpr uint64_t kReduceIncrement = 1000;

// Finite Luby sequence value for index i (1-based internally).
int luby(int y, int i) {
    int size, seq;
    for (size = 1, seq = 0; size < i + 1; seq++, size = 2 * size + 1) {
    }
    while (size - 1 != i) {
        size = (size - 1) >> 1;
        seq--;
        i = i % size;
    }
    int result = 1;
    for (int k = 0; k < seq; ++k)
        result *= y;
    return result;
}

// xorshift64*, used only to jitter initial activities per seed.
struct SplitMix {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double next_double() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
};

}  // namespace

Solver::Solver(SolverConfig config) : config_(config) {}

Solver::~Solver() = default;

void Solver::ensure_vars(int count) {
    while (num_vars() < count)
        new_var();
}

int Solver::num_vars() const {
    return static_cast<int>(assigns_.size());
}

void Solver::new_var() {
    int v = num_vars();
    assigns_.push_back(kUndef);
    var_data_.push_back({});
    SplitMix rng{config_.seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(v) + 1};
    activity_.push_back(rng.next_double() * 1e-6);
    polarity_.push_back(0);
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_pos_.push_back(-1);
    heap_insert(v);
}

bool Solver::add_clause(std::span<const int> dimacs_literals) {
    if (!ok_)
        return false;
    assert(decision_level() == 0);

    for (int lit : dimacs_literals)
        ensure_vars(std::abs(lit));

    problem_external_.emplace_back(dimacs_literals.begin(), dimacs_literals.end());

    // Sort, deduplicate, drop clauses satisfied or falsified at level 0.
    std::vector<int> lits;
    lits.reserve(dimacs_literals.size());
    for (int dl : dimacs_literals)
        lits.push_back(lit_of(dl));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

    std::vector<int> filtered;
    for (size_t i = 0; i < lits.size(); ++i) {
        if (i + 1 < lits.size() && lits[i + 1] == negate(lits[i]))
            return true;  // tautology
        if (value(lits[i]) == kTrue && var_data_[var_of(lits[i])].level == 0)
            return true;  // already satisfied
        if (value(lits[i]) == kFalse && var_data_[var_of(lits[i])].level == 0)
            continue;  // falsified at top level
        filtered.push_back(lits[i]);
    }

    if (filtered.empty()) {
        ok_ = false;
        return false;
    }
    if (filtered.size() == 1) {
        unchecked_enqueue(filtered[0], nullptr);
        ok_ = propagate() == nullptr;
        return ok_;
    }

    arena_.push_back({next_clause_id_++, 0.0f, 0, false, false, std::move(filtered)});
    Clause* clause = &arena_.back();
    problem_clauses_.push_back(clause);
    attach(clause);
    return true;
}

void Solver::attach(Clause* clause) {
    assert(clause->size() >= 2);
    watches_[negate(clause->lits[0])].push_back({clause, clause->lits[1]});
    watches_[negate(clause->lits[1])].push_back({clause, clause->lits[0]});
}

void Solver::detach(Clause* clause) {
    for (int w = 0; w < 2; ++w) {
        auto& list = watches_[negate(clause->lits[w])];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i].clause == clause) {
                list[i] = list.back();
                list.pop_back();
                break;
            }
    }
}

void Solver::remove_clause(Clause* clause) {
    drat_delete(clause->lits);
    detach(clause);
    clause->deleted = true;
    clause->lits.clear();
    clause->lits.shrink_to_fit();
}

bool Solver::locked(const Clause* clause) const {
    int first = clause->lits[0];
    return value(first) == kTrue && var_data_[var_of(first)].reason == clause;
}

void Solver::unchecked_enqueue(int lit, Clause* reason) {
    assert(value(lit) == kUndef);
    assigns_[var_of(lit)] = (lit & 1) ? kFalse : kTrue;
    var_data_[var_of(lit)] = {reason, decision_level()};
    trail_.push_back(lit);
}

Solver::Clause* Solver::propagate() {
    while (qhead_ < trail_.size()) {
        int p = trail_[qhead_++];
        ++stats_.propagations;
        auto& list = watches_[p];
        size_t i = 0, j = 0;
        while (i < list.size()) {
            Watcher w = list[i];
            if (value(w.blocker) == kTrue) {
                list[j++] = list[i++];
                continue;
            }
            Clause* clause = w.clause;
            int false_lit = negate(p);
            if (clause->lits[0] == false_lit)
                std::swap(clause->lits[0], clause->lits[1]);
            assert(clause->lits[1] == false_lit);
            ++i;

            int first = clause->lits[0];
            if (value(first) == kTrue) {
                list[j++] = {clause, first};
                continue;
            }
            bool found = false;
            for (int k = 2; k < clause->size(); ++k) {
                if (value(clause->lits[k]) != kFalse) {
                    std::swap(clause->lits[1], clause->lits[k]);
                    watches_[negate(clause->lits[1])].push_back({clause, first});
                    found = true;
                    break;
                }
            }
            if (found)
                continue;

            // Unit or conflicting.
            list[j++] = {clause, first};
            if (value(first) == kFalse) {
                // Copy remaining watchers and report the conflict.
                while (i < list.size())
                    list[j++] = list[i++];
                list.resize(j);
                qhead_ = trail_.size();
                return clause;
            }
            unchecked_enqueue(first, clause);
        }
        list.resize(j);
    }
    return nullptr;
}

void Solver::cancel_until(int level) {
    if (decision_level() <= level)
        return;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[level]; --i) {
        int lit = trail_[i];
        int var = var_of(lit);
        polarity_[var] = (lit & 1) ? 1 : 0;
        assigns_[var] = kUndef;
        var_data_[var].reason = nullptr;
        if (heap_pos_[var] < 0)
            heap_insert(var);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
}

void Solver::analyze(Clause* conflict, std::vector<int>& out_learnt, int& out_btlevel,
                     int& out_lbd) {
    int path_count = 0;
    int p = -1;
    out_learnt.clear();
    out_learnt.push_back(-1);  // slot for the asserting literal
    int index = static_cast<int>(trail_.size()) - 1;

    do {
        assert(conflict != nullptr);
        if (conflict->learnt)
            cla_bump_activity(*conflict);
        for (int k = (p == -1) ? 0 : 1; k < conflict->size(); ++k) {
            int q = conflict->lits[k];
            int v = var_of(q);
            if (!seen_[v] && var_data_[v].level > 0) {
                var_bump_activity(v);
                seen_[v] = 1;
                if (var_data_[v].level >= decision_level())
                    ++path_count;
                else
                    out_learnt.push_back(q);
            }
        }
        while (!seen_[var_of(trail_[index--])]) {
        }
        p = trail_[index + 1];
        conflict = var_data_[var_of(p)].reason;
        seen_[var_of(p)] = 0;
        --path_count;
    } while (path_count > 0);
    out_learnt[0] = negate(p);

    // Conflict-clause minimization (recursive).
    std::vector<int> to_clear(out_learnt.begin(), out_learnt.end());
    uint32_t abstract_levels = 0;
    for (size_t i = 1; i < out_learnt.size(); ++i)
        abstract_levels |= 1u << (var_data_[var_of(out_learnt[i])].level & 31);
    size_t keep = 1;
    for (size_t i = 1; i < out_learnt.size(); ++i) {
        int lit = out_learnt[i];
        if (var_data_[var_of(lit)].reason == nullptr ||
            !lit_redundant(lit, abstract_levels, to_clear))
            out_learnt[keep++] = lit;
    }
    out_learnt.resize(keep);

    for (int lit : to_clear)
        seen_[var_of(lit)] = 0;

    // Backtrack level: the second-highest level in the clause.
    if (out_learnt.size() == 1) {
        out_btlevel = 0;
    } else {
        size_t max_i = 1;
        for (size_t i = 2; i < out_learnt.size(); ++i)
            if (var_data_[var_of(out_learnt[i])].level >
                var_data_[var_of(out_learnt[max_i])].level)
                max_i = i;
        std::swap(out_learnt[1], out_learnt[max_i]);
        out_btlevel = var_data_[var_of(out_learnt[1])].level;
    }

    // LBD: number of distinct decision levels.
    std::vector<int> levels;
    for (int lit : out_learnt)
        levels.push_back(var_data_[var_of(lit)].level);
    std::sort(levels.begin(), levels.end());
    out_lbd = static_cast<int>(std::unique(levels.begin(), levels.end()) - levels.begin());
}

bool Solver::lit_redundant(int lit, uint32_t abstract_levels, std::vector<int>& to_clear) {
    std::vector<int> analyze_stack{lit};
    std::vector<int> marked;
    bool redundant = true;

    while (!analyze_stack.empty() && redundant) {
        int current = analyze_stack.back();
        analyze_stack.pop_back();
        Clause* reason = var_data_[var_of(current)].reason;
        assert(reason != nullptr);
        for (int k = 1; k < reason->size(); ++k) {
            int q = reason->lits[k];
            int v = var_of(q);
            if (seen_[v] || var_data_[v].level == 0)
                continue;
            if (var_data_[v].reason != nullptr &&
                (abstract_levels & (1u << (var_data_[v].level & 31))) != 0) {
                seen_[v] = 1;
                marked.push_back(q);
                analyze_stack.push_back(q);
            } else {
                redundant = false;
                break;
            }
        }
    }
    if (redundant) {
        // Keep the marks for later redundancy queries; analyze clears them.
        to_clear.insert(to_clear.end(), marked.begin(), marked.end());
    } else {
        for (int q : marked)
            seen_[var_of(q)] = 0;
    }
    return redundant;
}

void Solver::analyze_final(int p, std::vector<int>& out_core) {
    out_core.clear();
    out_core.push_back(dimacs_of(negate(p)));
    if (decision_level() == 0)
        return;

    seen_[var_of(p)] = 1;
    for (int i = static_cast<int>(trail_.size()) - 1; i >= trail_lim_[0]; --i) {
        int v = var_of(trail_[i]);
        if (!seen_[v])
            continue;
        if (var_data_[v].reason == nullptr) {
            assert(var_data_[v].level > 0);
            out_core.push_back(dimacs_of(trail_[i]));
        } else {
            Clause* reason = var_data_[v].reason;
            for (int k = 1; k < reason->size(); ++k)
                if (var_data_[var_of(reason->lits[k])].level > 0)
                    seen_[var_of(reason->lits[k])] = 1;
        }
        seen_[v] = 0;
    }
    seen_[var_of(p)] = 0;
}

int Solver::pick_branch_lit() {
    while (!heap_.empty()) {
        int var = heap_[0];
        if (assigns_[var] == kUndef) {
            heap_pop();
            return 2 * var + (polarity_[var] ? 1 : 0);
        }
        heap_pop();
    }
    return -1;
}

void Solver::var_bump_activity(int var) {
    activity_[var] += var_inc_;
    if (activity_[var] > kRescaleLimit) {
        for (double& a : activity_)
            a *= 1e-100;
        var_inc_ *= 1e-100;
    }
    if (heap_pos_[var] >= 0)
        heap_sift_up(heap_pos_[var]);
}

void Solver::var_decay_activity() {
    var_inc_ /= kVarDecay;
}

void Solver::cla_bump_activity(Clause& clause) {
    clause.activity += static_cast<float>(cla_inc_);
    if (clause.activity > 1e20f) {
        for (Clause* c : learnt_clauses_)
            if (!c->deleted)
                c->activity *= 1e-20f;
        cla_inc_ *= 1e-20;
    }
}

void Solver::cla_decay_activity() {
    cla_inc_ /= kClaDecay;
}

void Solver::reduce_db() {
    std::vector<Clause*> removable;
    for (Clause* c : learnt_clauses_)
        if (!c->deleted && !locked(c) && c->lbd > 3 && c->size() > 2)
            removable.push_back(c);

    std::sort(removable.begin(), removable.end(), [](const Clause* a, const Clause* b) {
        if (a->lbd != b->lbd)
            return a->lbd > b->lbd;
        if (a->activity != b->activity)
            return a->activity < b->activity;
        return a->id < b->id;
    });

    for (size_t i = 0; i < removable.size() / 2; ++i)
        remove_clause(removable[i]);

    learnt_clauses_.erase(
        std::remove_if(learnt_clauses_.begin(), learnt_clauses_.end(),
                       [](const Clause* c) { return c->deleted; }),
        learnt_clauses_.end());
}

Solver::SearchResult Solver::search(int restart_budget, std::span<const int> assumptions) {
    int conflict_count = 0;
    std::vector<int> learnt;

    for (;;) {
        Clause* conflict = propagate();
        if (conflict != nullptr) {
            ++stats_.conflicts;
            ++conflicts_this_solve_;
            ++conflict_count;
            if (decision_level() == 0) {
                ok_ = false;
                core_.clear();
                if (drat_ != nullptr)
                    (*drat_) << "0\n";
                return SearchResult::conflict_at_root;
            }
            int btlevel = 0;
            int lbd = 0;
            analyze(conflict, learnt, btlevel, lbd);
            record_learned(learnt, lbd);
            drat_add(learnt);
            cancel_until(btlevel);
            if (learnt.size() == 1) {
                unchecked_enqueue(learnt[0], nullptr);
            } else {
                arena_.push_back({next_clause_id_++, 0.0f, lbd, true, false, learnt});
                Clause* clause = &arena_.back();
                learnt_clauses_.push_back(clause);
                ++learnts_since_reduce_;
                attach(clause);
                cla_bump_activity(*clause);
                unchecked_enqueue(learnt[0], clause);
            }
            var_decay_activity();
            cla_decay_activity();
        } else {
            if (config_.conflict_budget != 0 && conflicts_this_solve_ >= config_.conflict_budget)
                return SearchResult::budget;
            if (conflict_count >= restart_budget) {
                ++stats_.restarts;
                cancel_until(0);
                return SearchResult::restart;
            }
            if (learnts_since_reduce_ >= kFirstReduce + kReduceIncrement * reduce_count_) {
                ++reduce_count_;
                learnts_since_reduce_ = 0;
                reduce_db();
            }

            int next = -1;
            while (decision_level() < static_cast<int>(assumptions.size())) {
                int p = lit_of(assumptions[decision_level()]);
                if (value(p) == kTrue) {
                    new_decision_level();
                } else if (value(p) == kFalse) {
                    analyze_final(negate(p), core_);
                    return SearchResult::assumption_conflict;
                } else {
                    next = p;
                    break;
                }
            }
            if (next == -1) {
                ++stats_.decisions;
                next = pick_branch_lit();
                if (next == -1) {
                    // All variables assigned: model found.
                    model_.assign(assigns_.begin(), assigns_.end());
                    return SearchResult::model;
                }
            }
            new_decision_level();
            unchecked_enqueue(next, nullptr);
        }
    }
}

SolveStatus Solver::solve(std::span<const int> assumptions) {
    for (int lit : assumptions)
        ensure_vars(std::abs(lit));

    model_.clear();
    core_.clear();
    recorded_.clear();
    conflicts_this_solve_ = 0;

    if (!ok_)
        return SolveStatus::unsat;

    int restarts = 0;
    for (;;) {
        int budget = luby(2, restarts) * kRestartBase;
        SearchResult result = search(budget, assumptions);
        switch (result) {
        case SearchResult::model:
            cancel_until(0);
            return SolveStatus::sat;
        case SearchResult::conflict_at_root:
        case SearchResult::assumption_conflict:
            cancel_until(0);
            return SolveStatus::unsat;
        case SearchResult::budget:
            cancel_until(0);
            return SolveStatus::timeout;
        case SearchResult::restart:
            ++restarts;
            break;
        }
    }
}

bool Solver::model_value(int var) const {
    assert(var >= 1 && var <= num_vars());
    return model_[var - 1] == kTrue;
}

std::vector<bool> Solver::model() const {
    std::vector<bool> result(model_.size());
    for (size_t i = 0; i < model_.size(); ++i)
        result[i] = model_[i] == kTrue;
    return result;
}

void Solver::record_learned(const std::vector<int>& internal_lits, int lbd) {
    LearnedClause clause;
    clause.lbd = lbd;
    clause.literals.reserve(internal_lits.size());
    for (int lit : internal_lits)
        clause.literals.push_back(dimacs_of(lit));
    std::sort(clause.literals.begin(), clause.literals.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    recorded_.push_back(std::move(clause));
}

std::vector<LearnedClause> Solver::export_learned(int max_size, int max_lbd) const {
    std::vector<LearnedClause> result;
    std::set<std::vector<int>> seen;
    for (const LearnedClause& clause : recorded_) {
        if (clause.size() > max_size || clause.lbd > max_lbd)
            continue;
        if (!seen.insert(clause.literals).second)
            continue;
        result.push_back(clause);
    }
    if (config_.verify_exports)
        for (const LearnedClause& clause : result)
            verify_entailed(clause);
    return result;
}

void Solver::verify_entailed(const LearnedClause& clause) const {
    Solver checker;
    checker.ensure_vars(num_vars());
    bool ok = true;
    for (const auto& lits : problem_external_)
        ok = checker.add_clause(lits) && ok;
    for (int lit : clause.literals) {
        int unit[1] = {-lit};
        ok = checker.add_clause(unit) && ok;
    }
    if (!ok)
        return;  // trivially unsat: entailed
    if (checker.solve() != SolveStatus::unsat)
        throw std::logic_error("exported learned clause is not entailed by the program");
}

bool Solver::check_invariants() const {
    if (!ok_)
        return true;  // root conflict: the database is terminally falsified
    // Watch invariant: the two watched literals of an unsatisfied clause are
    // non-false (checked only for fully backtracked solvers, level 0).
    for (const Clause* c : problem_clauses_) {
        if (c->deleted || c->size() < 2)
            continue;
        bool satisfied = false;
        for (int lit : c->lits)
            if (value(lit) == kTrue)
                satisfied = true;
        if (satisfied)
            continue;
        for (int w = 0; w < 2; ++w)
            if (value(c->lits[w]) == kFalse && var_data_[var_of(c->lits[w])].level == 0)
                return false;
    }
    // Implication invariant: every non-decision trail literal's reason clause
    // has all other literals false.
    for (int lit : trail_) {
        const Clause* reason = var_data_[var_of(lit)].reason;
        if (reason == nullptr)
            continue;
        if (reason->lits[0] != lit)
            return false;
        for (int k = 1; k < reason->size(); ++k)
            if (value(reason->lits[k]) != kFalse)
                return false;
    }
    return true;
}

void Solver::drat_add(std::span<const int> internal_lits) {
    if (drat_ == nullptr)
        return;
    for (int lit : internal_lits)
        (*drat_) << dimacs_of(lit) << ' ';
    (*drat_) << "0\n";
}

void Solver::drat_delete(std::span<const int> internal_lits) {
    if (drat_ == nullptr)
        return;
    (*drat_) << "d ";
    for (int lit : internal_lits)
        (*drat_) << dimacs_of(lit) << ' ';
    (*drat_) << "0\n";
}

// --- activity-ordered heap -------------------------------------------------

bool Solver::heap_less(int a, int b) const {
    if (activity_[a] != activity_[b])
        return activity_[a] > activity_[b];
    return a < b;  // deterministic tie-break
}

void Solver::heap_insert(int var) {
    heap_pos_[var] = static_cast<int>(heap_.size());
    heap_.push_back(var);
    heap_sift_up(heap_pos_[var]);
}

int Solver::heap_pop() {
    int top = heap_[0];
    heap_pos_[top] = -1;
    if (heap_.size() > 1) {
        heap_[0] = heap_.back();
        heap_pos_[heap_[0]] = 0;
        heap_.pop_back();
        heap_sift_down(0);
    } else {
        heap_.pop_back();
    }
    return top;
}

void Solver::heap_sift_up(int pos) {
    int var = heap_[pos];
    while (pos > 0) {
        int parent = (pos - 1) / 2;
        if (!heap_less(var, heap_[parent]))
            break;
        heap_[pos] = heap_[parent];
        heap_pos_[heap_[pos]] = pos;
        pos = parent;
    }
    heap_[pos] = var;
    heap_pos_[var] = pos;
}

void Solver::heap_sift_down(int pos) {
    int var = heap_[pos];
    int size = static_cast<int>(heap_.size());
    for (;;) {
        int child = 2 * pos + 1;
        if (child >= size)
            break;
        if (child + 1 < size && heap_less(heap_[child + 1], heap_[child]))
            ++child;
        if (!heap_less(heap_[child], var))
            break;
        heap_[pos] = heap_[child];
        heap_pos_[heap_[pos]] = pos;
        pos = child;
    }
    heap_[pos] = var;
    heap_pos_[var] = pos;
}

void Solver::heap_update(int var) {
    if (heap_pos_[var] >= 0) {
        heap_sift_up(heap_pos_[var]);
        heap_sift_down(heap_pos_[var]);
    }
}

}  // namespace planforge::sat
