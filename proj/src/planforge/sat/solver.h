#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

namespace planforge::sat {

enum class SolveStatus { sat, unsat, timeout };

// A clause learned from a conflict, reported in DIMACS literal convention
// (positive k = variable k-1 true). Sorted by |literal| for canonical form.
struct LearnedClause {
    std::vector<int> literals;
    int lbd = 0;  // distinct decision levels at learning time

    int size() const { return static_cast<int>(literals.size()); }
};

struct SolverConfig {
    uint64_t seed = 1;
    // 0 means unlimited; counted per solve() call.
    uint64_t conflict_budget = 0;
    // Re-derive every exported clause from the problem clauses (solver call
    // on program AND NOT clause); throws on failure.
    bool verify_exports = false;
};

struct SolverStats {
    uint64_t conflicts = 0;
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t restarts = 0;
};

// Conflict-driven clause learning over DIMACS-style integer literals:
// two-watched literals, first-UIP learning with recursive minimization,
// VSIDS decay activities, Luby restarts, LBD-based database reduction,
// assumption-based solving with unsat cores. Deterministic for a fixed seed.
class Solver {
public:
    explicit Solver(SolverConfig config = {});
    ~Solver();

    Solver(const Solver&) = delete;
    Solver& operator=(const Solver&) = delete;
    // Moves are safe: watcher pointers target deque elements, which stay put.
    Solver(Solver&&) = default;

    // Variables are created on demand by add_clause/solve; this just reserves.
    void ensure_vars(int count);
    int num_vars() const;

    // Returns false if the clause database became trivially unsatisfiable.
    bool add_clause(std::span<const int> dimacs_literals);

    SolveStatus solve(std::span<const int> assumptions = {});

    // After sat: value of DIMACS variable (1-based).
    bool model_value(int var) const;
    std::vector<bool> model() const;

    // After unsat under assumptions: a subset of the assumptions sufficient
    // for unsatisfiability (empty when the program alone is unsat).
    const std::vector<int>& unsat_core() const { return core_; }

    // Clauses learned during the last solve() call, filtered by size and lbd.
    std::vector<LearnedClause> export_learned(int max_size, int max_lbd) const;

    const SolverStats& stats() const { return stats_; }

    // Optional DRAT log (learned clause additions plus d-prefixed deletions).
    void set_drat(std::ostream* out) { drat_ = out; }

    // Debug sweep over the watch and implication invariants.
    bool check_invariants() const;

private:
    struct Clause {
        uint32_t id;
        float activity = 0.0f;
        int lbd = 0;
        bool learnt = false;
        bool deleted = false;
        std::vector<int> lits;  // internal literal encoding (2*var + sign)

        int size() const { return static_cast<int>(lits.size()); }
    };

    struct Watcher {
        Clause* clause;
        int blocker;
    };

    struct VarData {
        Clause* reason = nullptr;
        int level = 0;
    };

    // Internal literal helpers: lit = 2*var + (negated ? 1 : 0).
    static int lit_of(int dimacs) {
        int var = std::abs(dimacs) - 1;
        return 2 * var + (dimacs < 0 ? 1 : 0);
    }
    static int dimacs_of(int lit) { return (lit & 1) ? -(lit / 2 + 1) : lit / 2 + 1; }
    static int var_of(int lit) { return lit >> 1; }
    static int negate(int lit) { return lit ^ 1; }

    static constexpr int8_t kTrue = 1, kFalse = -1, kUndef = 0;

    int8_t value(int lit) const {
        int8_t v = assigns_[var_of(lit)];
        return (lit & 1) ? static_cast<int8_t>(-v) : v;
    }

    int decision_level() const { return static_cast<int>(trail_lim_.size()); }

    void new_var();
    void attach(Clause* clause);
    void detach(Clause* clause);
    void remove_clause(Clause* clause);
    bool locked(const Clause* clause) const;

    void unchecked_enqueue(int lit, Clause* reason);
    Clause* propagate();
    void cancel_until(int level);
    void new_decision_level() { trail_lim_.push_back(static_cast<int>(trail_.size())); }

    void analyze(Clause* conflict, std::vector<int>& out_learnt, int& out_btlevel,
                 int& out_lbd);
    bool lit_redundant(int lit, uint32_t abstract_levels, std::vector<int>& to_clear);
    void analyze_final(int p, std::vector<int>& out_core);

    enum class SearchResult { model, conflict_at_root, assumption_conflict, restart, budget };

    int pick_branch_lit();
    void var_bump_activity(int var);
    void var_decay_activity();
    void cla_bump_activity(Clause& clause);
    void cla_decay_activity();

    void reduce_db();
    SearchResult search(int restart_budget, std::span<const int> assumptions);

    void heap_insert(int var);
    void heap_update(int var);
    int heap_pop();
    bool heap_less(int a, int b) const;
    void heap_sift_up(int pos);
    void heap_sift_down(int pos);

    void drat_add(std::span<const int> internal_lits);
    void drat_delete(std::span<const int> internal_lits);

    void record_learned(const std::vector<int>& internal_lits, int lbd);
    void verify_entailed(const LearnedClause& clause) const;

    SolverConfig config_;
    SolverStats stats_;

    bool ok_ = true;
    std::deque<Clause> arena_;
    std::vector<Clause*> problem_clauses_;
    std::vector<Clause*> learnt_clauses_;
    std::vector<std::vector<int>> problem_external_;  // original clauses, DIMACS form

    std::vector<std::vector<Watcher>> watches_;  // indexed by internal literal
    std::vector<int8_t> assigns_;                // by var
    std::vector<VarData> var_data_;
    std::vector<double> activity_;
    std::vector<uint8_t> polarity_;  // saved phase, by var
    std::vector<uint8_t> seen_;

    std::vector<int> trail_;
    std::vector<int> trail_lim_;
    size_t qhead_ = 0;

    std::vector<int> heap_;      // binary max-heap of vars by activity
    std::vector<int> heap_pos_;  // -1 if absent

    double var_inc_ = 1.0;
    double cla_inc_ = 1.0;
    uint32_t next_clause_id_ = 0;

    uint64_t conflicts_this_solve_ = 0;
    uint64_t learnts_since_reduce_ = 0;
    uint64_t reduce_count_ = 0;

    std::vector<int> assumptions_;
    std::vector<int> core_;
    std::vector<int8_t> model_;

    std::vector<LearnedClause> recorded_;

    std::ostream* drat_ = nullptr;
};

}  // namespace planforge::sat
