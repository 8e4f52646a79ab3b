#include "planforge/task/grounder.h"

#include <algorithm>
#include <map>
#include <set>

namespace planforge::task {

namespace {

struct Candidate {
    int schema = 0;
    std::vector<int> binding;       // object id per parameter
    std::vector<int> pre_pos;       // atom ids
    std::vector<int> pre_neg;
    std::vector<int> add;
    std::vector<int> del;
    bool relaxed_applicable = false;
};

class AtomInterner {
public:
    int intern(const GroundAtom& atom) {
        auto it = ids_.find(atom);
        if (it != ids_.end())
            return it->second;
        int id = static_cast<int>(atoms_.size());
        atoms_.push_back(atom);
        ids_.emplace(atom, id);
        return id;
    }

    const GroundAtom& atom(int id) const { return atoms_[id]; }
    size_t size() const { return atoms_.size(); }

private:
    std::vector<GroundAtom> atoms_;
    std::map<GroundAtom, int> ids_;
};

int resolve(const Term& term, const std::vector<int>& binding) {
    return term.is_param ? binding[term.index] : term.index;
}

GroundAtom instantiate(const SchemaAtom& atom, const std::vector<int>& binding) {
    GroundAtom ground;
    ground.predicate = atom.predicate;
    ground.args.reserve(atom.args.size());
    for (const Term& t : atom.args)
        ground.args.push_back(resolve(t, binding));
    return ground;
}

std::string atom_name(const PlanningTask& task, const GroundAtom& atom) {
    std::string name = "(" + task.predicates[atom.predicate].name;
    for (int obj : atom.args)
        name += " " + task.objects[obj].name;
    return name + ")";
}

std::string action_name(const PlanningTask& task, const LiftedAction& schema,
                        const std::vector<int>& binding) {
    std::string name = "(" + schema.name;
    for (int obj : binding)
        name += " " + task.objects[obj].name;
    return name + ")";
}

}  // namespace

GroundTask ground(const PlanningTask& task, const GroundingOptions& options) {
    AtomInterner interner;

    // Candidate object lists per schema parameter, in object-id order.
    std::vector<std::vector<std::vector<int>>> schema_domains(task.actions.size());
    size_t total_bindings = 0;
    for (size_t s = 0; s < task.actions.size(); ++s) {
        const LiftedAction& schema = task.actions[s];
        size_t count = 1;
        for (int type : schema.param_types) {
            schema_domains[s].push_back(task.objects_of_type(type));
            size_t dom = schema_domains[s].back().size();
            if (dom == 0) {
                count = 0;
                break;
            }
            if (count > options.action_cap / dom + 1)
                count = options.action_cap + 1;
            else
                count *= dom;
        }
        total_bindings += std::min(count, options.action_cap + 1);
        if (total_bindings > options.action_cap)
            throw GroundingExplosion("grounding exceeds action cap of " +
                                     std::to_string(options.action_cap));
    }

    // Enumerate bindings in lexicographic order and instantiate.
    std::vector<Candidate> candidates;
    for (size_t s = 0; s < task.actions.size(); ++s) {
        const LiftedAction& schema = task.actions[s];
        const auto& domains = schema_domains[s];
        std::vector<int> binding(schema.param_types.size(), 0);

        bool empty_domain = false;
        for (const auto& d : domains)
            if (d.empty())
                empty_domain = true;
        if (empty_domain)
            continue;

        std::vector<int> cursor(schema.param_types.size(), 0);
        bool done = false;
        while (!done) {
            for (size_t p = 0; p < cursor.size(); ++p)
                binding[p] = domains[p][cursor[p]];

            bool ok = true;
            for (const EqualityConstraint& eq : schema.equalities) {
                bool equal = resolve(eq.lhs, binding) == resolve(eq.rhs, binding);
                if (equal != eq.must_equal) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                Candidate cand;
                cand.schema = static_cast<int>(s);
                cand.binding = binding;
                for (const SchemaLiteral& lit : schema.precondition) {
                    int id = interner.intern(instantiate(lit.atom, binding));
                    (lit.positive ? cand.pre_pos : cand.pre_neg).push_back(id);
                }
                std::set<int> add_set, del_set;
                for (const SchemaLiteral& lit : schema.effects) {
                    int id = interner.intern(instantiate(lit.atom, binding));
                    (lit.positive ? add_set : del_set).insert(id);
                }
                // A ground instance that both adds and deletes the same atom
                // is ill-formed; drop it.
                bool conflicting = false;
                for (int id : add_set)
                    if (del_set.count(id))
                        conflicting = true;
                // Contradictory ground precondition (p and not p): never applicable.
                for (int id : cand.pre_pos)
                    if (std::find(cand.pre_neg.begin(), cand.pre_neg.end(), id) !=
                        cand.pre_neg.end())
                        conflicting = true;
                if (!conflicting) {
                    cand.add.assign(add_set.begin(), add_set.end());
                    cand.del.assign(del_set.begin(), del_set.end());
                    candidates.push_back(std::move(cand));
                }
            }

            // Advance the lexicographic cursor.
            done = true;
            for (int p = static_cast<int>(cursor.size()) - 1; p >= 0; --p) {
                if (++cursor[p] < static_cast<int>(domains[p].size())) {
                    done = false;
                    break;
                }
                cursor[p] = 0;
            }
            if (cursor.empty())
                done = true;  // zero-parameter schema: single binding
        }
    }

    // Intern init and goal atoms so the id space is complete before the
    // reachability pass.
    std::vector<int> init_ids;
    for (const GroundAtom& atom : task.init)
        init_ids.push_back(interner.intern(atom));
    std::vector<int> goal_ids;
    std::vector<bool> goal_positive;
    for (const auto& [atom, positive] : task.goal) {
        goal_ids.push_back(interner.intern(atom));
        goal_positive.push_back(positive);
    }

    // Delete-free relaxed reachability from the initial atoms; negative
    // preconditions are treated as always satisfiable.
    std::vector<char> reached(interner.size(), 0);
    for (int id : init_ids)
        reached[id] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Candidate& cand : candidates) {
            if (cand.relaxed_applicable)
                continue;
            bool applicable = true;
            for (int id : cand.pre_pos)
                if (!reached[id]) {
                    applicable = false;
                    break;
                }
            if (!applicable)
                continue;
            cand.relaxed_applicable = true;
            for (int id : cand.add)
                if (!reached[id]) {
                    reached[id] = 1;
                    changed = true;
                }
        }
    }

    // Atom universe: relaxed-reachable atoms plus all goal atoms (so that an
    // unreachable positive goal yields an honest all-horizons-UNSAT encoding).
    std::vector<int> universe;
    for (size_t id = 0; id < interner.size(); ++id)
        if (reached[id])
            universe.push_back(static_cast<int>(id));
    for (size_t g = 0; g < goal_ids.size(); ++g)
        if (!reached[goal_ids[g]])
            universe.push_back(goal_ids[g]);

    std::sort(universe.begin(), universe.end(), [&](int a, int b) {
        return interner.atom(a) < interner.atom(b);
    });
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    std::vector<int> var_of(interner.size(), -1);
    GroundTask ground_task;
    ground_task.name = task.name;
    for (int id : universe) {
        StateVariable var;
        var.id = static_cast<int>(ground_task.variables.size());
        var.name = atom_name(task, interner.atom(id));
        var.domain_size = 2;
        var.value_names = {"false", "true"};
        var_of[id] = var.id;
        ground_task.variables.push_back(std::move(var));
    }

    // Initial state.
    ground_task.initial_state.assign(ground_task.variables.size(), 0);
    for (const GroundAtom& atom : task.init) {
        int var = var_of[interner.intern(atom)];
        if (var >= 0)
            ground_task.initial_state[var] = 1;
    }

    // Final ground actions in (schema, binding) order.
    for (const Candidate& cand : candidates) {
        if (!cand.relaxed_applicable)
            continue;
        GroundAction action;
        action.name = action_name(task, task.actions[cand.schema], cand.binding);

        std::map<int, int> pre;  // var -> value
        for (int id : cand.pre_pos)
            pre[var_of[id]] = 1;
        for (int id : cand.pre_neg)
            if (var_of[id] >= 0)
                pre[var_of[id]] = 0;  // statically false atoms: trivially satisfied
        std::map<int, int> eff;
        for (int id : cand.add)
            eff[var_of[id]] = 1;
        for (int id : cand.del)
            if (var_of[id] >= 0)
                eff[var_of[id]] = 0;

        // Effects that restate the action's own precondition are no-ops.
        for (auto it = eff.begin(); it != eff.end();) {
            auto p = pre.find(it->first);
            if (p != pre.end() && p->second == it->second)
                it = eff.erase(it);
            else
                ++it;
        }
        if (eff.empty())
            continue;

        for (const auto& [var, value] : pre)
            action.precondition.push_back({var, value});
        for (const auto& [var, value] : eff)
            action.effect.push_back({var, value});
        action.id = static_cast<int>(ground_task.actions.size());
        ground_task.actions.push_back(std::move(action));
    }

    // Goal; negative goal literals on statically false atoms are trivially true.
    std::map<int, int> goal_map;
    for (size_t g = 0; g < goal_ids.size(); ++g) {
        int var = var_of[goal_ids[g]];
        int value = goal_positive[g] ? 1 : 0;
        if (!goal_positive[g] && var < 0)
            continue;
        auto it = goal_map.find(var);
        if (it != goal_map.end() && it->second != value)
            throw Error("contradictory goal on " + ground_task.variables[var].name);
        goal_map[var] = value;
    }
    for (const auto& [var, value] : goal_map)
        ground_task.goal.push_back({var, value});

    ground_task.check();
    return ground_task;
}

}  // namespace planforge::task
