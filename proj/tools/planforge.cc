#include <CLI11.hpp>

#include "planforge/driver/run.h"

int main(int argc, char** argv) {
    using planforge::driver::ExitStatus;
    planforge::driver::RunConfig config;

    CLI::App app{"planforge - bounded-horizon planner with invariant feedback"};

    std::string semantics = "seq";
    std::string invariants = "on";
    std::string stats_timing = "on";
    bool no_idle_off = false;
    double time_budget = 0;
    uint64_t conflict_budget = 0;

    app.add_option("--domain", config.domain_path, "PDDL domain file");
    app.add_option("--problem", config.problem_path, "PDDL problem file");
    app.add_option("--sas", config.sas_path, "SAS task file (instead of PDDL)");
    app.add_option("--semantics", semantics, "Step semantics: seq or par")
        ->check(CLI::IsMember({"seq", "par"}));
    app.add_option("--horizon-start", config.horizon_start, "First horizon to try")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--horizon-step", config.horizon_step, "Horizon increment")
        ->check(CLI::PositiveNumber);
    app.add_option("--horizon-max", config.horizon_max, "Largest horizon to try")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--no-idle-off", no_idle_off, "Drop the at-least-one-action-per-step clauses");
    app.add_option("--invariants", invariants, "Invariant feedback loop: on or off")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--invariants-in", config.invariants_in_path,
                   "Warm-start candidate file (re-proven before use)");
    app.add_option("--invariants-out", config.invariants_out_path,
                   "Write proven invariants to this file");
    app.add_option("--plan-out", config.plan_out_path, "Write the plan to this file");
    app.add_option("--stats-out", config.stats_out_path, "Write run statistics (JSON)");
    app.add_option("--seed", config.seed, "Solver seed");
    app.add_option("--conflict-budget", conflict_budget,
                   "Total conflict budget across planning solves (0 = unlimited)");
    app.add_option("--time-budget", time_budget, "Wall-clock budget in seconds (0 = unlimited)");
    app.add_option("--emit-cnf", config.emit_cnf_path,
                   "Export the deciding horizon's DIMACS CNF (plus .map sidecar)");
    app.add_option("--stats-timing", stats_timing,
                   "Include wall-clock timings in stats (off for byte-reproducible output)")
        ->check(CLI::IsMember({"on", "off"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitStatus::input_error);
    }

    bool pddl_mode = !config.domain_path.empty() || !config.problem_path.empty();
    bool sas_mode = !config.sas_path.empty();
    if (pddl_mode == sas_mode || (pddl_mode && (config.domain_path.empty() ||
                                                config.problem_path.empty()))) {
        std::cerr << "planforge: need either --domain and --problem, or --sas\n";
        return static_cast<int>(ExitStatus::input_error);
    }
    if (config.horizon_max < config.horizon_start) {
        std::cerr << "planforge: --horizon-max must be >= --horizon-start\n";
        return static_cast<int>(ExitStatus::input_error);
    }

    config.semantics = semantics == "par" ? planforge::encoding::Semantics::forall_parallel
                                          : planforge::encoding::Semantics::sequential;
    config.no_idle = !no_idle_off;
    config.invariants_enabled = invariants == "on";
    config.stats_timing = stats_timing == "on";
    config.budget.wall_seconds = time_budget;
    config.budget.total_conflicts = conflict_budget;

    planforge::driver::RunOutcome outcome = planforge::driver::run(config);
    return static_cast<int>(outcome.status);
}
