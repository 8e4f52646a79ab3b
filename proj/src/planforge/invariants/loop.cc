#include "planforge/invariants/loop.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "planforge/encoding/encoder.h"
#include "planforge/invariants/generalize.h"
#include "planforge/util/log.h"

namespace planforge::invariants {

namespace {

int thread_count(const LoopConfig& config) {
    if (config.threads > 0)
        return config.threads;
    if (const char* env = std::getenv("PLANFORGE_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0)
            return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(4u, hw == 0 ? 1u : hw));
}

struct ProofOutcome {
    CandidateProperty property;
    ProveResult result;
};

// Proves a batch of candidates against a fixed support snapshot. Results are
// deterministic per candidate, so completion order never matters.
std::vector<ProofOutcome> prove_batch(const std::vector<CandidateProperty>& batch,
                                      const task::GroundTask& task, const ProofConfig& config,
                                      int threads) {
    std::vector<ProofOutcome> outcomes(batch.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t index = next.fetch_add(1);
            if (index >= batch.size())
                return;
            outcomes[index].property = batch[index];
            outcomes[index].result = prove(batch[index], task, config);
        }
    };
    int spawn = std::min<int>(threads, static_cast<int>(batch.size()));
    if (spawn <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < spawn; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    return outcomes;
}

}  // namespace

LoopResult feedback_loop(const task::GroundTask& task, const LoopConfig& config) {
    using Clock = std::chrono::steady_clock;
    const auto loop_start = Clock::now();

    LoopResult result{CandidatePool(config.budget.retire_after), std::nullopt, -1, {}, false};
    CandidatePool& pool = result.pool;

    auto out_of_time = [&]() {
        if (config.budget.wall_seconds <= 0)
            return false;
        double elapsed = std::chrono::duration<double>(Clock::now() - loop_start).count();
        return elapsed >= config.budget.wall_seconds;
    };

    for (const CandidateProperty& candidate : config.warm_start) {
        if (pool.known_count() >= config.budget.max_candidates)
            break;
        CandidateProperty copy = candidate;
        pool.add_pending(std::move(copy));
    }

    uint64_t conflicts_used = 0;
    int solve_id = 0;

    for (int horizon = config.horizon_start; horizon <= config.horizon_max;
         horizon += config.horizon_step) {
        const auto horizon_start = Clock::now();
        HorizonRecord record;
        record.horizon = horizon;

        encoding::EncodeOptions options;
        options.semantics = config.semantics;
        options.no_idle = config.no_idle;
        encoding::CnfProgram program = encode(task, horizon, options);
        encoding::InjectionReport injection =
            add_invariant_constraints(program, pool.proven_properties());
        log::debugf("horizon %d: %zu clauses (%d injected from %zu invariants)", horizon,
                    program.clauses.size(), injection.injected_clauses, pool.proven_count());

        sat::SolverConfig solver_config;
        solver_config.seed = config.seed;
        if (config.budget.total_conflicts != 0) {
            if (conflicts_used >= config.budget.total_conflicts) {
                result.budget_exhausted = true;
                return result;
            }
            solver_config.conflict_budget = config.budget.total_conflicts - conflicts_used;
        }

        sat::Solver solver(solver_config);
        solver.ensure_vars(program.atom_count());
        for (const auto& clause : program.clauses)
            solver.add_clause(clause);
        sat::SolveStatus status = solver.solve();
        ++solve_id;

        conflicts_used += solver.stats().conflicts;
        record.verdict = status;
        record.conflicts = solver.stats().conflicts;
        record.decisions = solver.stats().decisions;

        if (status == sat::SolveStatus::sat) {
            result.plan = encoding::decode_plan(program, solver.model());
            result.plan_horizon = horizon;
            record.wall_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - horizon_start).count();
            result.records.push_back(record);
            return result;
        }
        if (status == sat::SolveStatus::timeout) {
            result.budget_exhausted = true;
            record.wall_ms =
                std::chrono::duration<double, std::milli>(Clock::now() - horizon_start).count();
            result.records.push_back(record);
            return result;
        }

        // UNSAT: harvest learned clauses and generalize them into candidates.
        std::vector<sat::LearnedClause> learned =
            solver.export_learned(config.export_max_size, config.export_max_lbd);
        record.learned_exported = learned.size();
        for (const sat::LearnedClause& clause : learned) {
            if (pool.known_count() >= config.budget.max_candidates)
                break;
            std::optional<CandidateProperty> candidate = generalize(clause, program, task);
            if (!candidate)
                continue;
            if (candidate->window() > config.max_candidate_window)
                continue;
            candidate->origin = {task.name, solve_id};
            pool.add_pending(std::move(*candidate));
        }

        // Prove pending candidates against a snapshot of the proven set; the
        // snapshot keeps concurrent proof results order-independent.
        std::vector<CandidateProperty> pending = pool.pending();
        if (!pending.empty() && !out_of_time()) {
            std::vector<CandidateProperty> support = pool.proven_properties();
            ProofConfig proof_config;
            proof_config.seed = config.seed;
            proof_config.conflict_budget = config.budget.proof_conflict_budget;
            proof_config.support = support;

            std::vector<ProofOutcome> outcomes =
                prove_batch(pending, task, proof_config, thread_count(config));
            for (ProofOutcome& outcome : outcomes) {
                switch (outcome.result.status) {
                case ProveResult::Status::proven:
                    pool.mark_proven(outcome.property,
                                     std::move(outcome.result.certificate));
                    ++record.candidates_proven;
                    break;
                case ProveResult::Status::refuted:
                    pool.mark_refuted(outcome.property);
                    ++record.candidates_refuted;
                    break;
                case ProveResult::Status::unknown:
                    pool.mark_unknown(outcome.property);
                    ++record.candidates_unknown;
                    break;
                }
            }
        }

        record.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - horizon_start).count();
        result.records.push_back(record);
        log::infof("horizon %d: unsat (%llu conflicts, %zu proven invariants)", horizon,
                   static_cast<unsigned long long>(record.conflicts), pool.proven_count());

        if (out_of_time()) {
            result.budget_exhausted = true;
            return result;
        }
    }
    return result;
}

}  // namespace planforge::invariants
