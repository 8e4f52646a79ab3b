#include "planforge/pddl/printer.h"

#include <sstream>

namespace planforge::pddl {

namespace {

void print_typed_list(std::ostream& out, const std::vector<TypedName>& list) {
    for (size_t i = 0; i < list.size(); ++i) {
        if (i > 0)
            out << ' ';
        out << list[i].name << " - " << list[i].type;
    }
}

void print_atom(std::ostream& out, const Atom& atom) {
    out << '(' << atom.predicate;
    for (const std::string& arg : atom.args)
        out << ' ' << arg;
    out << ')';
}

void print_literal(std::ostream& out, const Literal& lit) {
    if (!lit.positive)
        out << "(not ";
    print_atom(out, lit.atom);
    if (!lit.positive)
        out << ')';
}

void print_conjunction(std::ostream& out, const std::vector<Literal>& lits) {
    out << "(and";
    for (const Literal& lit : lits) {
        out << ' ';
        print_literal(out, lit);
    }
    out << ')';
}

}  // namespace

std::string print_domain(const DomainAst& domain) {
    std::ostringstream out;
    out << "(define (domain " << domain.name << ")\n";
    if (!domain.requirements.empty()) {
        out << "  (:requirements";
        for (const std::string& req : domain.requirements)
            out << ' ' << req;
        out << ")\n";
    }
    if (!domain.types.empty()) {
        out << "  (:types";
        for (const auto& [type, super] : domain.types)
            out << ' ' << type << " - " << super;
        out << ")\n";
    }
    if (!domain.constants.empty()) {
        out << "  (:constants ";
        print_typed_list(out, domain.constants);
        out << ")\n";
    }
    out << "  (:predicates";
    for (const PredicateDecl& pred : domain.predicates) {
        out << " (" << pred.name;
        if (!pred.params.empty()) {
            out << ' ';
            print_typed_list(out, pred.params);
        }
        out << ')';
    }
    out << ")\n";
    for (const ActionSchema& action : domain.actions) {
        out << "  (:action " << action.name << "\n    :parameters (";
        print_typed_list(out, action.params);
        out << ")\n    :precondition ";
        print_conjunction(out, action.precondition);
        out << "\n    :effect ";
        print_conjunction(out, action.effect);
        out << ")\n";
    }
    out << ")\n";
    return out.str();
}

std::string print_problem(const ProblemAst& problem) {
    std::ostringstream out;
    out << "(define (problem " << problem.name << ")\n";
    out << "  (:domain " << problem.domain_name << ")\n";
    if (!problem.objects.empty()) {
        out << "  (:objects ";
        print_typed_list(out, problem.objects);
        out << ")\n";
    }
    out << "  (:init";
    for (const Atom& atom : problem.init) {
        out << ' ';
        print_atom(out, atom);
    }
    out << ")\n";
    out << "  (:goal ";
    print_conjunction(out, problem.goal);
    out << ")\n";
    out << ")\n";
    return out.str();
}

}  // namespace planforge::pddl
