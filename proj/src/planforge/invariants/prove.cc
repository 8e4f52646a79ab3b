#include "planforge/invariants/prove.h"

#include "planforge/encoding/encoder.h"
#include "planforge/sat/solver.h"
#include "planforge/util/hash.h"

namespace planforge::invariants {

namespace {

int literal_at_base(const encoding::CnfProgram& program, const CandidateLiteral& lit,
                    int base, bool positive) {
    int t = base + lit.offset;
    if (lit.kind == CandidateLiteral::Kind::holds)
        return program.holds_literal(lit.a, lit.b, t, positive);
    return program.occurs_literal(lit.a, t, positive);
}

void load_program(sat::Solver& solver, const encoding::CnfProgram& program) {
    solver.ensure_vars(program.atom_count());
    for (const auto& clause : program.clauses)
        solver.add_clause(clause);
}

uint64_t fingerprint_query(const encoding::CnfProgram& program,
                           std::span<const int> assumptions, uint64_t seed) {
    Fnv1a hash;
    hash.feed(static_cast<uint64_t>(program.horizon));
    hash.feed(static_cast<uint64_t>(program.clauses.size()));
    for (const auto& clause : program.clauses) {
        for (int lit : clause)
            hash.feed(lit);
        hash.feed(0);
    }
    for (int lit : assumptions)
        hash.feed(lit);
    hash.feed(seed);
    return hash.value();
}

Witness extract_witness(const encoding::CnfProgram& program, const sat::Solver& solver,
                        const task::GroundTask& task) {
    Witness witness;
    std::vector<bool> model = solver.model();
    for (int t = 0; t <= program.horizon; ++t) {
        task::State state(task.variables.size(), 0);
        for (size_t v = 0; v < task.variables.size(); ++v)
            for (int d = 0; d < task.variables[v].domain_size; ++d)
                if (model[program.holds_index(static_cast<int>(v), d, t)])
                    state[v] = d;
        witness.states.push_back(std::move(state));
    }
    task::Plan plan = encoding::decode_plan(program, model);
    witness.steps = plan.steps;
    return witness;
}

}  // namespace

ProveResult prove(const CandidateProperty& candidate, const task::GroundTask& task,
                  const ProofConfig& config) {
    ProveResult result;
    const int window = candidate.window();

    encoding::EncodeOptions base_options;
    base_options.semantics = encoding::Semantics::forall_parallel;
    base_options.no_idle = false;
    base_options.include_init = true;
    base_options.include_goal = false;

    std::vector<CandidateProperty> support(config.support.begin(), config.support.end());

    // BASE: the candidate holds at base time 0 of every execution prefix.
    encoding::CnfProgram base_program = encode(task, window - 1, base_options);
    encoding::add_invariant_constraints(base_program, support);
    std::vector<int> base_assumptions;
    for (const CandidateLiteral& lit : candidate.literals)
        base_assumptions.push_back(literal_at_base(base_program, lit, 0, !lit.positive));

    sat::SolverConfig solver_config;
    solver_config.seed = config.seed;
    solver_config.conflict_budget = config.conflict_budget;

    {
        sat::Solver solver(solver_config);
        load_program(solver, base_program);
        sat::SolveStatus status = solver.solve(base_assumptions);
        if (status == sat::SolveStatus::timeout)
            return result;  // unknown
        if (status == sat::SolveStatus::sat) {
            result.status = ProveResult::Status::refuted;
            result.witness = extract_witness(base_program, solver, task);
            return result;
        }
    }

    // STEP: truth at base 0 propagates to base 1 over one transition from an
    // arbitrary exactly-one/mutex-consistent state.
    encoding::EncodeOptions step_options = base_options;
    step_options.include_init = false;
    encoding::CnfProgram step_program = encode(task, window, step_options);
    encoding::add_invariant_constraints(step_program, support);

    std::vector<int> hypothesis;
    for (const CandidateLiteral& lit : candidate.literals)
        hypothesis.push_back(literal_at_base(step_program, lit, 0, lit.positive));
    std::vector<int> step_assumptions;
    for (const CandidateLiteral& lit : candidate.literals)
        step_assumptions.push_back(literal_at_base(step_program, lit, 1, !lit.positive));

    uint64_t fingerprint = 0;
    {
        sat::Solver solver(solver_config);
        load_program(solver, step_program);
        solver.add_clause(hypothesis);
        fingerprint = fingerprint_query(step_program, step_assumptions, config.seed);
        sat::SolveStatus status = solver.solve(step_assumptions);
        if (status != sat::SolveStatus::unsat)
            return result;  // unknown: SAT (not inductive) or budget exhausted
    }

    result.status = ProveResult::Status::proven;
    result.certificate.base_horizon = window - 1;
    result.certificate.step_fingerprint = fingerprint;
    result.certificate.seed = config.seed;
    result.certificate.support = std::move(support);
    return result;
}

}  // namespace planforge::invariants
