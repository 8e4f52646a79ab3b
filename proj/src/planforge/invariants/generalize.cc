#include "planforge/invariants/generalize.h"

#include <algorithm>

namespace planforge::invariants {

std::optional<CandidateProperty> generalize(const sat::LearnedClause& clause,
                                            const encoding::CnfProgram& program,
                                            const task::GroundTask& task) {
    std::vector<char> goal_var(task.variables.size(), 0);
    for (const task::VarValue& vv : task.goal)
        goal_var[vv.var] = 1;

    CandidateProperty property;
    int min_time = -1;
    for (int dimacs : clause.literals) {
        encoding::TimedAtom atom = program.atom(std::abs(dimacs) - 1);
        CandidateLiteral lit;
        lit.positive = dimacs > 0;
        lit.offset = atom.time;  // absolute for now; normalized below
        if (atom.kind == encoding::TimedAtom::Kind::holds) {
            // Instance-bound literals: the unit clauses of init pin every
            // variable at time 0, the goal pins its variables at time n.
            if (atom.time == 0)
                return std::nullopt;
            if (atom.time == program.horizon && goal_var[atom.a])
                return std::nullopt;
            lit.kind = CandidateLiteral::Kind::holds;
            lit.a = atom.a;
            lit.b = atom.b;
        } else {
            lit.kind = CandidateLiteral::Kind::occurs;
            lit.a = atom.a;
            lit.b = 0;
        }
        property.literals.push_back(lit);
        min_time = min_time < 0 ? atom.time : std::min(min_time, atom.time);
    }
    if (property.literals.empty())
        return std::nullopt;
    property.normalize();
    return property;
}

}  // namespace planforge::invariants
