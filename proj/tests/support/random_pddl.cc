#include "support/random_pddl.h"

#include <random>
#include <set>

namespace planforge::test {

namespace {

using namespace planforge::pddl;

std::string name_of(const char* prefix, int i) {
    return std::string(prefix) + std::to_string(i);
}

Atom random_atom(std::mt19937_64& rng, const std::vector<PredicateDecl>& predicates,
                 const std::vector<std::string>& terms) {
    const PredicateDecl& pred = predicates[rng() % predicates.size()];
    Atom atom;
    atom.predicate = pred.name;
    for (size_t i = 0; i < pred.params.size(); ++i)
        atom.args.push_back(terms[rng() % terms.size()]);
    return atom;
}

}  // namespace

DomainAst random_domain(uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 1);
    DomainAst domain;
    domain.name = name_of("dom", static_cast<int>(seed));
    domain.requirements = {":strips", ":negative-preconditions"};

    int num_predicates = 1 + static_cast<int>(rng() % 4);
    for (int p = 0; p < num_predicates; ++p) {
        PredicateDecl decl;
        decl.name = name_of("p", p);
        int arity = static_cast<int>(rng() % 3);
        for (int a = 0; a < arity; ++a)
            decl.params.push_back({name_of("?x", a), "object"});
        domain.predicates.push_back(std::move(decl));
    }

    int num_actions = 1 + static_cast<int>(rng() % 3);
    for (int a = 0; a < num_actions; ++a) {
        ActionSchema action;
        action.name = name_of("act", a);
        int arity = static_cast<int>(rng() % 3);
        std::vector<std::string> terms;
        for (int i = 0; i < arity; ++i) {
            action.params.push_back({name_of("?v", i), "object"});
            terms.push_back(name_of("?v", i));
        }
        if (terms.empty())
            terms.push_back("?dummy");  // replaced below if used
        bool used_dummy = false;

        auto pick_atom = [&]() {
            Atom atom = random_atom(rng, domain.predicates, terms);
            for (const std::string& arg : atom.args)
                if (arg == "?dummy")
                    used_dummy = true;
            return atom;
        };

        int num_pre = static_cast<int>(rng() % 3);
        for (int i = 0; i < num_pre; ++i)
            action.precondition.push_back({pick_atom(), rng() % 3 != 0});

        // Effects must not contradict; track used atoms per polarity.
        std::set<Atom> effect_atoms;
        int num_eff = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < num_eff; ++i) {
            Atom atom = pick_atom();
            if (!effect_atoms.insert(atom).second)
                continue;
            action.effect.push_back({std::move(atom), rng() % 2 == 0});
        }
        if (action.effect.empty())
            action.effect.push_back({pick_atom(), true});
        if (used_dummy)
            action.params.push_back({"?dummy", "object"});
        domain.actions.push_back(std::move(action));
    }
    return domain;
}

ProblemAst random_problem(uint64_t seed, const DomainAst& domain) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 7);
    ProblemAst problem;
    problem.name = name_of("prob", static_cast<int>(seed));
    problem.domain_name = domain.name;

    int num_objects = 1 + static_cast<int>(rng() % 4);
    std::vector<std::string> objects;
    for (int o = 0; o < num_objects; ++o) {
        problem.objects.push_back({name_of("o", o), "object"});
        objects.push_back(name_of("o", o));
    }

    std::set<Atom> init_atoms;
    int num_init = static_cast<int>(rng() % 5);
    for (int i = 0; i < num_init; ++i) {
        Atom atom = random_atom(rng, domain.predicates, objects);
        if (init_atoms.insert(atom).second)
            problem.init.push_back(atom);
    }
    int num_goal = 1 + static_cast<int>(rng() % 3);
    std::set<Atom> goal_atoms;
    for (int i = 0; i < num_goal; ++i) {
        Atom atom = random_atom(rng, domain.predicates, objects);
        if (goal_atoms.insert(atom).second)
            problem.goal.push_back({atom, rng() % 3 != 0});
    }
    return problem;
}

}  // namespace planforge::test
