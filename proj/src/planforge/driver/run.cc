#include "planforge/driver/run.h"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planforge/encoding/dimacs.h"
#include "planforge/encoding/encoder.h"
#include "planforge/invariants/audit.h"
#include "planforge/invariants/report_io.h"
#include "planforge/pddl/lexer.h"
#include "planforge/pddl/normalize.h"
#include "planforge/pddl/parser.h"
#include "planforge/task/explore.h"
#include "planforge/task/grounder.h"
#include "planforge/task/plan_io.h"
#include "planforge/task/sas_io.h"
#include "planforge/task/transition.h"
#include "planforge/util/log.h"

namespace planforge::driver {

namespace {

// States explored by the post-run invariant audit before it gives up; the
// audit is defense in depth, not a scalability feature.
constexpr size_t kAuditStateCap = 200000;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
}

task::GroundTask load_task(const RunConfig& config) {
    if (!config.sas_path.empty())
        return task::parse_sas(read_file(config.sas_path));

    std::string domain_text = read_file(config.domain_path);
    std::string problem_text = read_file(config.problem_path);

    auto frontend = [&](const std::string& path, auto&& parse) {
        try {
            return parse();
        } catch (const pddl::FrontendError& e) {
            throw Error(path + ":" + std::to_string(e.pos.line) + ":" +
                        std::to_string(e.pos.column) + ": " + e.what());
        }
    };

    pddl::DomainAst domain = frontend(config.domain_path, [&] {
        return pddl::parse_domain(pddl::tokenize(domain_text));
    });
    pddl::ProblemAst problem = frontend(config.problem_path, [&] {
        return pddl::parse_problem(pddl::tokenize(problem_text), domain);
    });
    return task::ground(pddl::normalize(domain, problem));
}

void maybe_emit_cnf(const RunConfig& config, const encoding::CnfProgram& program) {
    if (config.emit_cnf_path.empty())
        return;
    std::ostringstream cnf;
    encoding::write_dimacs(program, cnf);
    write_file(config.emit_cnf_path, cnf.str());
    std::ostringstream map;
    encoding::write_atom_map(program, map);
    write_file(config.emit_cnf_path + ".map", map.str());
}

// Plain incremental-horizon search without the invariant machinery.
invariants::LoopResult plain_loop(const task::GroundTask& task, const RunConfig& config) {
    using Clock = std::chrono::steady_clock;
    invariants::LoopResult result{invariants::CandidatePool(), std::nullopt, -1, {}, false};
    uint64_t conflicts_used = 0;

    for (int horizon = config.horizon_start; horizon <= config.horizon_max;
         horizon += config.horizon_step) {
        const auto start = Clock::now();
        encoding::EncodeOptions options;
        options.semantics = config.semantics;
        options.no_idle = config.no_idle;
        encoding::CnfProgram program = encode(task, horizon, options);

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
        conflicts_used += solver.stats().conflicts;

        invariants::HorizonRecord record;
        record.horizon = horizon;
        record.verdict = status;
        record.conflicts = solver.stats().conflicts;
        record.decisions = solver.stats().decisions;
        record.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        result.records.push_back(record);

        if (status == sat::SolveStatus::sat) {
            result.plan = encoding::decode_plan(program, solver.model());
            result.plan_horizon = horizon;
            return result;
        }
        if (status == sat::SolveStatus::timeout) {
            result.budget_exhausted = true;
            return result;
        }
    }
    return result;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
    RunOutcome outcome;

    task::GroundTask ground_task;
    try {
        ground_task = load_task(config);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        outcome.status = ExitStatus::input_error;
        return outcome;
    }
    log::infof("task: %zu variables, %zu actions", ground_task.variables.size(),
               ground_task.actions.size());

    invariants::LoopConfig loop_config;
    loop_config.semantics = config.semantics;
    loop_config.horizon_start = config.horizon_start;
    loop_config.horizon_step = config.horizon_step;
    loop_config.horizon_max = config.horizon_max;
    loop_config.no_idle = config.no_idle;
    loop_config.seed = config.seed;
    loop_config.budget = config.budget;

    if (!config.invariants_in_path.empty()) {
        try {
            invariants::ImportResult imported = invariants::read_invariants(
                read_file(config.invariants_in_path), ground_task);
            if (imported.skipped > 0)
                log::infof("invariant import: %zu entries skipped (unknown names)",
                           imported.skipped);
            loop_config.warm_start = std::move(imported.candidates);
        } catch (const Error& e) {
            std::cerr << e.what() << "\n";
            outcome.status = ExitStatus::input_error;
            return outcome;
        }
    }

    invariants::LoopResult result = config.invariants_enabled
                                        ? invariants::feedback_loop(ground_task, loop_config)
                                        : plain_loop(ground_task, config);
    outcome.stats.horizons = result.records;
    outcome.plan = result.plan;
    outcome.plan_horizon = result.plan_horizon;

    // Internal cross-checks: the decoded plan must validate, the proven
    // invariants must survive the reachability audit. Failures are bugs.
    bool internal_failure = false;
    if (result.plan) {
        if (auto error = task::validate_plan(ground_task, *result.plan)) {
            std::cerr << "internal validation failure: plan step " << error->step << ": "
                      << error->reason << "\n";
            internal_failure = true;
        }
    }
    if (config.invariants_enabled && result.pool.proven_count() > 0) {
        invariants::AuditResult audit =
            invariants::soundness_audit(result.pool.proven(), ground_task, kAuditStateCap);
        if (audit.status == invariants::AuditResult::Status::counterexample_found) {
            std::cerr << "internal validation failure: " << audit.description << "\n";
            internal_failure = true;
        } else if (audit.status == invariants::AuditResult::Status::overflow) {
            log::infof("invariant audit skipped: %s", audit.description.c_str());
        }
    }

    // Artifacts.
    try {
        if (result.plan && !internal_failure) {
            std::string plan_text = task::write_plan(ground_task, *result.plan);
            if (!config.plan_out_path.empty())
                write_file(config.plan_out_path, plan_text);
            std::cout << plan_text;
        }
        if (!config.invariants_out_path.empty())
            write_file(config.invariants_out_path,
                       invariants::write_invariants(result.pool.proven(), ground_task));
        if (!config.stats_out_path.empty())
            write_file(config.stats_out_path,
                       print_stats(outcome.stats, config.stats_timing));
        if (!config.emit_cnf_path.empty()) {
            // Export the deciding horizon's program (the last one encoded).
            int horizon = result.plan ? result.plan_horizon
                                      : (result.records.empty()
                                             ? config.horizon_start
                                             : result.records.back().horizon);
            encoding::EncodeOptions options;
            options.semantics = config.semantics;
            options.no_idle = config.no_idle;
            encoding::CnfProgram program = encode(ground_task, horizon, options);
            if (config.invariants_enabled)
                add_invariant_constraints(program, result.pool.proven_properties());
            maybe_emit_cnf(config, program);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        outcome.status = ExitStatus::input_error;
        return outcome;
    }

    if (internal_failure)
        outcome.status = ExitStatus::internal_validation_failure;
    else if (result.plan)
        outcome.status = ExitStatus::plan_found;
    else
        outcome.status = ExitStatus::no_plan_within_horizon;
    return outcome;
}

}  // namespace planforge::driver
