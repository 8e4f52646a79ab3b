#include "planforge/pddl/normalize.h"

#include <map>

#include "planforge/pddl/errors.h"

namespace planforge::pddl {

namespace {

struct NameTables {
    std::map<std::string, int> types;
    std::map<std::string, int> objects;
    std::map<std::string, int> predicates;
    std::map<std::string, int> params;  // per action, rebuilt
};

task::Term resolve_term(const std::string& name, const NameTables& tables, SourcePos pos) {
    if (name.front() == '?') {
        auto it = tables.params.find(name);
        if (it == tables.params.end())
            throw TypeError(pos, "unbound variable '" + name + "'");
        return {true, it->second};
    }
    auto it = tables.objects.find(name);
    if (it == tables.objects.end())
        throw TypeError(pos, "unknown object '" + name + "'");
    return {false, it->second};
}

task::SchemaAtom resolve_atom(const Atom& atom, const NameTables& tables) {
    task::SchemaAtom out;
    out.predicate = tables.predicates.at(atom.predicate);
    for (const std::string& arg : atom.args)
        out.args.push_back(resolve_term(arg, tables, {0, 0}));
    return out;
}

}  // namespace

task::PlanningTask normalize(const DomainAst& domain, const ProblemAst& problem) {
    task::PlanningTask task;
    task.name = problem.name;
    NameTables tables;

    // Types: id 0 is the root.
    task.type_names.push_back("object");
    task.type_parent.push_back(-1);
    tables.types["object"] = 0;
    auto intern_type = [&](const std::string& name) {
        auto it = tables.types.find(name);
        if (it != tables.types.end())
            return it->second;
        int id = static_cast<int>(task.type_names.size());
        task.type_names.push_back(name);
        task.type_parent.push_back(0);
        tables.types[name] = id;
        return id;
    };
    for (const auto& [type, super] : domain.types) {
        int super_id = intern_type(super);
        int type_id = intern_type(type);
        if (type_id != 0)
            task.type_parent[type_id] = super_id;
    }

    // Objects: domain constants first, then problem objects.
    auto add_object = [&](const TypedName& entry) {
        auto it = tables.types.find(entry.type);
        if (it == tables.types.end())
            throw TypeError({0, 0}, "object '" + entry.name + "' has unknown type '" +
                                        entry.type + "'");
        tables.objects[entry.name] = static_cast<int>(task.objects.size());
        task.objects.push_back({entry.name, it->second});
    };
    for (const TypedName& c : domain.constants)
        add_object(c);
    for (const TypedName& o : problem.objects)
        add_object(o);

    // Predicates become Boolean fluent schemas.
    for (const PredicateDecl& pred : domain.predicates) {
        tables.predicates[pred.name] = static_cast<int>(task.predicates.size());
        task::PredicateInfo info;
        info.name = pred.name;
        for (const TypedName& p : pred.params) {
            auto it = tables.types.find(p.type);
            info.param_types.push_back(it == tables.types.end() ? 0 : it->second);
        }
        task.predicates.push_back(std::move(info));
    }

    for (const ActionSchema& schema : domain.actions) {
        task::LiftedAction action;
        action.name = schema.name;
        tables.params.clear();
        for (const TypedName& p : schema.params) {
            auto it = tables.types.find(p.type);
            if (it == tables.types.end())
                throw TypeError({0, 0}, "parameter '" + p.name + "' has unknown type '" +
                                            p.type + "'");
            tables.params[p.name] = static_cast<int>(action.param_types.size());
            action.param_types.push_back(it->second);
        }
        for (const Literal& lit : schema.precondition) {
            if (lit.atom.predicate == "=") {
                task::EqualityConstraint eq;
                eq.lhs = resolve_term(lit.atom.args[0], tables, {0, 0});
                eq.rhs = resolve_term(lit.atom.args[1], tables, {0, 0});
                eq.must_equal = lit.positive;
                action.equalities.push_back(eq);
            } else {
                action.precondition.push_back({resolve_atom(lit.atom, tables), lit.positive});
            }
        }
        for (const Literal& lit : schema.effect)
            action.effects.push_back({resolve_atom(lit.atom, tables), lit.positive});
        task.actions.push_back(std::move(action));
    }

    tables.params.clear();
    for (const Atom& atom : problem.init) {
        task::GroundAtom ground;
        ground.predicate = tables.predicates.at(atom.predicate);
        for (const std::string& arg : atom.args)
            ground.args.push_back(resolve_term(arg, tables, {0, 0}).index);
        task.init.push_back(std::move(ground));
    }
    for (const Literal& lit : problem.goal) {
        task::GroundAtom ground;
        ground.predicate = tables.predicates.at(lit.atom.predicate);
        for (const std::string& arg : lit.atom.args)
            ground.args.push_back(resolve_term(arg, tables, {0, 0}).index);
        task.goal.emplace_back(std::move(ground), lit.positive);
    }
    return task;
}

}  // namespace planforge::pddl
