#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace planforge::pddl {

// Name with its declared type; untyped declarations default to "object".
struct TypedName {
    std::string name;
    std::string type = "object";

    bool operator==(const TypedName&) const = default;
};

struct Atom {
    std::string predicate;  // "=" for equality atoms
    std::vector<std::string> args;  // variables ("?x") or constants

    auto operator<=>(const Atom&) const = default;
};

struct Literal {
    Atom atom;
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;

    bool operator==(const PredicateDecl&) const = default;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<Literal> precondition;  // conjunction
    std::vector<Literal> effect;        // conjunction

    bool operator==(const ActionSchema&) const = default;
};

struct DomainAst {
    std::string name;
    std::set<std::string> requirements;  // ":strips", ":typing", ...
    std::vector<std::pair<std::string, std::string>> types;  // (type, parent)
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionSchema> actions;

    bool operator==(const DomainAst&) const = default;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<Atom> init;         // ground, positive, deduplicated
    std::vector<Literal> goal;      // ground conjunction

    bool operator==(const ProblemAst&) const = default;
};

}  // namespace planforge::pddl
