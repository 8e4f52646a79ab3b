#include <doctest.h>

#include <algorithm>
#include <random>

#include "planforge/pddl/lexer.h"
#include "planforge/pddl/normalize.h"
#include "planforge/pddl/parser.h"
#include "planforge/pddl/printer.h"
#include "support/random_pddl.h"
#include "support/test_corpus.h"

using namespace planforge;
using pddl::Token;

namespace {

std::string join_tokens(const pddl::TokenStream& tokens) {
    std::string out;
    for (const Token& t : tokens) {
        if (!out.empty())
            out += ' ';
        out += t.text;
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize: minimal domain header") {
    auto tokens = pddl::tokenize("(define (domain d))");
    REQUIRE(tokens.size() == 7);
    CHECK(tokens[0].kind == Token::Kind::lparen);
    CHECK(tokens[1].text == "define");
    CHECK(tokens[2].kind == Token::Kind::lparen);
    CHECK(tokens[3].text == "domain");
    CHECK(tokens[4].text == "d");
    CHECK(tokens[5].kind == Token::Kind::rparen);
    CHECK(tokens[6].kind == Token::Kind::rparen);
}

TEST_CASE("tokenize: empty input") {
    CHECK(pddl::tokenize("").empty());
}

TEST_CASE("tokenize: comments are skipped, sigils kept") {
    auto tokens = pddl::tokenize("?x ; comment\n:action");
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].kind == Token::Kind::variable);
    CHECK(tokens[0].text == "?x");
    CHECK(tokens[1].kind == Token::Kind::keyword);
    CHECK(tokens[1].text == ":action");
    CHECK(tokens[1].line == 2);
    CHECK(tokens[1].column == 1);
}

TEST_CASE("tokenize: case folding") {
    auto tokens = pddl::tokenize("(DEfine (DOMAIN Blocks))");
    CHECK(tokens[1].text == "define");
    CHECK(tokens[3].text == "domain");
    CHECK(tokens[4].text == "blocks");
}

TEST_CASE("tokenize: illegal character carries position") {
    try {
        pddl::tokenize("(define\n  @)");
        FAIL("expected LexError");
    } catch (const pddl::LexError& e) {
        CHECK(e.pos.line == 2);
        CHECK(e.pos.column == 3);
    }
}

TEST_CASE("tokenize: round-trip through single-space concatenation") {
    std::vector<std::string> files = {"blocks-domain.pddl", "gripper-domain.pddl",
                                      "delivery-domain.pddl", "gripper-2.pddl",
                                      "delivery-1.pddl"};
    for (const auto& file : files) {
        auto tokens = pddl::tokenize(test::read_corpus(file));
        auto again = pddl::tokenize(join_tokens(tokens));
        CHECK(tokens == again);
    }
}

TEST_CASE("parse_domain: smallest nonempty domain") {
    auto tokens = pddl::tokenize(
        "(define (domain d) (:predicates (p)) "
        "(:action a :precondition (p) :effect (not (p))))");
    pddl::DomainAst domain = pddl::parse_domain(tokens);
    CHECK(domain.name == "d");
    REQUIRE(domain.predicates.size() == 1);
    REQUIRE(domain.actions.size() == 1);
    const auto& effect = domain.actions[0].effect;
    REQUIRE(effect.size() == 1);
    CHECK(effect[0].positive == false);
    CHECK(effect[0].atom.predicate == "p");
}

TEST_CASE("parse_domain: out-of-fragment requirement flag") {
    auto tokens = pddl::tokenize(
        "(define (domain d) (:requirements :strips :durative-actions))");
    CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::UnsupportedRequirement);
}

TEST_CASE("parse_domain: out-of-fragment section") {
    auto tokens = pddl::tokenize("(define (domain d) (:functions (cost)))");
    CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::UnsupportedRequirement);
}

TEST_CASE("parse_domain: disjunctions are rejected, not compiled away") {
    auto tokens = pddl::tokenize(
        "(define (domain d) (:predicates (p) (q)) "
        "(:action a :precondition (or (p) (q)) :effect (p)))");
    CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::ParseError);
}

TEST_CASE("parse_domain: blocksworld corpus counts") {
    pddl::DomainAst domain = test::load_domain("blocks-domain.pddl");
    CHECK(domain.name == "blocks");
    CHECK(domain.predicates.size() == 5);
    REQUIRE(domain.actions.size() == 4);
    std::vector<std::string> names;
    for (const auto& action : domain.actions)
        names.push_back(action.name);
    std::vector<std::string> expected = {"pick-up", "put-down", "stack", "unstack"};
    CHECK(names == expected);
}

TEST_CASE("parse_domain: structural errors") {
    SUBCASE("duplicate predicate") {
        auto tokens = pddl::tokenize("(define (domain d) (:predicates (p) (p)))");
        CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::ParseError);
    }
    SUBCASE("undeclared variable in effect") {
        auto tokens = pddl::tokenize(
            "(define (domain d) (:predicates (p ?x)) "
            "(:action a :parameters (?x) :precondition (p ?x) :effect (p ?y)))");
        CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::ParseError);
    }
    SUBCASE("contradictory schema effect") {
        auto tokens = pddl::tokenize(
            "(define (domain d) (:predicates (p)) "
            "(:action a :precondition (p) :effect (and (p) (not (p)))))");
        CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::ParseError);
    }
    SUBCASE("type cycle") {
        auto tokens = pddl::tokenize(
            "(define (domain d) (:requirements :typing) (:types a - b b - a))");
        CHECK_THROWS_AS(pddl::parse_domain(tokens), pddl::ParseError);
    }
}

TEST_CASE("parse_problem: minimal and counts") {
    auto domain = pddl::parse_domain(pddl::tokenize(
        "(define (domain d) (:predicates (p)) "
        "(:action a :precondition (p) :effect (not (p))))"));
    auto problem = pddl::parse_problem(
        pddl::tokenize("(define (problem q) (:domain d) (:init (p)) (:goal (not (p))))"),
        domain);
    CHECK(problem.init.size() == 1);
    CHECK(problem.goal.size() == 1);
    CHECK_FALSE(problem.goal[0].positive);
}

TEST_CASE("parse_problem: undeclared object in goal is a type error") {
    auto domain = pddl::parse_domain(pddl::tokenize(
        "(define (domain d) (:predicates (p ?x)) "
        "(:action a :parameters (?x) :precondition (p ?x) :effect (not (p ?x))))"));
    auto tokens = pddl::tokenize(
        "(define (problem q) (:domain d) (:objects o) (:init (p o)) (:goal (p z)))");
    CHECK_THROWS_AS(pddl::parse_problem(tokens, domain), pddl::TypeError);
}

TEST_CASE("parse_problem: domain name mismatch") {
    auto domain = pddl::parse_domain(
        pddl::tokenize("(define (domain d) (:predicates (p)))"));
    auto tokens =
        pddl::tokenize("(define (problem q) (:domain other) (:init (p)) (:goal (p)))");
    CHECK_THROWS_AS(pddl::parse_problem(tokens, domain), pddl::DomainMismatch);
}

TEST_CASE("parse_problem: negated init atom rejected") {
    auto domain = pddl::parse_domain(
        pddl::tokenize("(define (domain d) (:predicates (p)))"));
    auto tokens = pddl::tokenize(
        "(define (problem q) (:domain d) (:init (not (p))) (:goal (p)))");
    CHECK_THROWS_AS(pddl::parse_problem(tokens, domain), pddl::ParseError);
}

TEST_CASE("parse_problem: gripper-2 object list matches the corpus file") {
    pddl::DomainAst domain = test::load_domain("gripper-domain.pddl");
    pddl::ProblemAst problem = test::load_problem("gripper-2.pddl", domain);
    std::vector<std::string> names;
    for (const auto& obj : problem.objects)
        names.push_back(obj.name);
    std::sort(names.begin(), names.end());
    std::vector<std::string> expected = {"ball1", "ball2", "left", "right", "rooma", "roomb"};
    CHECK(names == expected);
}

TEST_CASE("normalize: minimal task shape") {
    auto domain = pddl::parse_domain(pddl::tokenize(
        "(define (domain d) (:predicates (p)) "
        "(:action a :precondition (p) :effect (not (p))))"));
    auto problem = pddl::parse_problem(
        pddl::tokenize("(define (problem q) (:domain d) (:init (p)) (:goal (not (p))))"),
        domain);
    task::PlanningTask task = pddl::normalize(domain, problem);
    CHECK(task.predicates.size() == 1);
    CHECK(task.actions.size() == 1);
    CHECK(task.init.size() == 1);
}

TEST_CASE("normalize: typing becomes a parameter membership constraint") {
    pddl::DomainAst domain = test::load_domain("delivery-domain.pddl");
    pddl::ProblemAst problem = test::load_problem("delivery-1.pddl", domain);
    task::PlanningTask task = pddl::normalize(domain, problem);

    const task::LiftedAction* load = nullptr;
    for (const auto& action : task.actions)
        if (action.name == "load")
            load = &action;
    REQUIRE(load != nullptr);
    // ?p - package: the parameter's candidate objects are exactly the packages.
    std::vector<int> candidates = task.objects_of_type(load->param_types[0]);
    std::vector<std::string> names;
    for (int obj : candidates)
        names.push_back(task.objects[obj].name);
    std::vector<std::string> expected = {"p1", "p2"};
    CHECK(names == expected);
    // Equality constraints of drive were captured.
    const task::LiftedAction* drive = nullptr;
    for (const auto& action : task.actions)
        if (action.name == "drive")
            drive = &action;
    REQUIRE(drive != nullptr);
    REQUIRE(drive->equalities.size() == 1);
    CHECK_FALSE(drive->equalities[0].must_equal);
}

TEST_CASE("round-trip: parse(print(ast)) == ast on the corpus") {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"blocks-domain.pddl", "blocks-3.pddl"},
        {"gripper-domain.pddl", "gripper-2.pddl"},
        {"delivery-domain.pddl", "delivery-1.pddl"},
    };
    for (const auto& [domain_file, problem_file] : pairs) {
        pddl::DomainAst domain = test::load_domain(domain_file);
        pddl::DomainAst domain2 = pddl::parse_domain(pddl::tokenize(print_domain(domain)));
        CHECK(domain == domain2);

        pddl::ProblemAst problem = test::load_problem(problem_file, domain);
        pddl::ProblemAst problem2 =
            pddl::parse_problem(pddl::tokenize(print_problem(problem)), domain);
        CHECK(problem == problem2);
    }
}

TEST_CASE("round-trip: random small ASTs") {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        pddl::DomainAst domain = test::random_domain(seed);
        CAPTURE(seed);
        pddl::DomainAst domain2 = pddl::parse_domain(pddl::tokenize(print_domain(domain)));
        CHECK(domain == domain2);
        pddl::ProblemAst problem = test::random_problem(seed, domain);
        pddl::ProblemAst problem2 =
            pddl::parse_problem(pddl::tokenize(print_problem(problem)), domain);
        CHECK(problem == problem2);
    }
}

TEST_CASE("case-insensitivity: uppercased file parses to the same AST") {
    std::string text = test::read_corpus("blocks-domain.pddl");
    std::string upper = text;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    CHECK(pddl::parse_domain(pddl::tokenize(text)) ==
          pddl::parse_domain(pddl::tokenize(upper)));
}

TEST_CASE("fuzz: mutated corpus inputs never crash, errors are structured") {
    std::vector<std::string> seeds = {
        test::read_corpus("blocks-domain.pddl"),
        test::read_corpus("gripper-2.pddl"),
        test::read_corpus("delivery-domain.pddl"),
    };
    std::mt19937_64 rng(20260810);
    int parsed = 0, rejected = 0;
    for (int round = 0; round < 600; ++round) {
        std::string text = seeds[rng() % seeds.size()];
        int mutations = 1 + static_cast<int>(rng() % 8);
        for (int m = 0; m < mutations; ++m) {
            size_t pos = text.empty() ? 0 : rng() % text.size();
            switch (rng() % 5) {
            case 0:
                text = text.substr(0, pos);  // truncate
                break;
            case 1:
                if (!text.empty())
                    text[pos] = "()?:;ab1-_="[rng() % 12];
                break;
            case 2:
                text.insert(pos, 1, '(');
                break;
            case 3:
                text.insert(pos, 1, ')');
                break;
            case 4:
                if (!text.empty())
                    text.erase(pos, 1 + rng() % 10);
                break;
            }
        }
        try {
            auto domain = pddl::parse_domain(pddl::tokenize(text));
            ++parsed;
        } catch (const pddl::FrontendError&) {
            ++rejected;  // structured error with a position: fine
        }
        // Anything else (segfault, std::bad_alloc, logic_error) fails the test.
    }
    CHECK(parsed + rejected == 600);
    CHECK(rejected > 0);
}
