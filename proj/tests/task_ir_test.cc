#include <doctest.h>

#include <random>
#include <set>

#include "planforge/pddl/lexer.h"
#include "planforge/pddl/normalize.h"
#include "planforge/pddl/parser.h"
#include "planforge/task/explore.h"
#include "planforge/task/grounder.h"
#include "planforge/task/plan_io.h"
#include "planforge/task/sas_io.h"
#include "planforge/task/transition.h"
#include "support/test_corpus.h"

using namespace planforge;

namespace {

task::PlanningTask lifted_from_text(const std::string& domain_text,
                                    const std::string& problem_text) {
    auto domain = pddl::parse_domain(pddl::tokenize(domain_text));
    auto problem = pddl::parse_problem(pddl::tokenize(problem_text), domain);
    return pddl::normalize(domain, problem);
}

int count_actions_with_prefix(const task::GroundTask& task, const std::string& prefix) {
    int count = 0;
    for (const auto& action : task.actions)
        if (action.name.rfind("(" + prefix, 0) == 0)
            ++count;
    return count;
}

}  // namespace

TEST_CASE("ground: blocksworld-3 instantiates to exactly 18 actions") {
    task::GroundTask ground = test::ground_corpus("blocks-domain.pddl", "blocks-3.pddl");
    CHECK(ground.actions.size() == 18);
    CHECK(count_actions_with_prefix(ground, "pick-up") == 3);
    CHECK(count_actions_with_prefix(ground, "put-down") == 3);
    CHECK(count_actions_with_prefix(ground, "stack") == 6);
    CHECK(count_actions_with_prefix(ground, "unstack") == 6);
    // Boolean fluents from PDDL carry the fixed value names.
    for (const auto& var : ground.variables) {
        CHECK(var.domain_size == 2);
        CHECK(var.value_names == std::vector<std::string>{"false", "true"});
    }
}

TEST_CASE("ground: equality constraints filter bindings") {
    const char* domain_text =
        "(define (domain d) (:requirements :strips :equality) (:predicates (p ?x ?y)) "
        "(:action eq :parameters (?x ?y) :precondition (and (= ?x ?y)) :effect (p ?x ?y)) "
        "(:action neq :parameters (?x ?y) :precondition (and (not (= ?x ?y))) "
        ":effect (p ?x ?y)))";
    const char* problem_text =
        "(define (problem q) (:domain d) (:objects o1 o2) (:init) (:goal (p o1 o1)))";
    task::GroundTask ground = task::ground(lifted_from_text(domain_text, problem_text));
    CHECK(count_actions_with_prefix(ground, "eq") == 2);    // diagonal only
    CHECK(count_actions_with_prefix(ground, "neq") == 2);   // off-diagonal only
}

TEST_CASE("ground: statically false preconditions drop the instance") {
    const char* domain_text =
        "(define (domain d) (:predicates (p) (q) (r)) "
        "(:action a :precondition (q) :effect (r)))";
    const char* problem_text =
        "(define (problem x) (:domain d) (:init (p)) (:goal (r)))";
    task::GroundTask ground = task::ground(lifted_from_text(domain_text, problem_text));
    CHECK(ground.actions.empty());  // q is never true
}

TEST_CASE("ground: negative precondition on statically false atom is dropped") {
    const char* domain_text =
        "(define (domain d) (:requirements :negative-preconditions) "
        "(:predicates (p) (q) (r)) "
        "(:action a :precondition (and (p) (not (q))) :effect (r)))";
    const char* problem_text =
        "(define (problem x) (:domain d) (:init (p)) (:goal (r)))";
    task::GroundTask ground = task::ground(lifted_from_text(domain_text, problem_text));
    REQUIRE(ground.actions.size() == 1);
    CHECK(ground.actions[0].precondition.size() == 1);  // only p remains
}

TEST_CASE("ground: explosion cap") {
    pddl::DomainAst domain = test::load_domain("blocks-domain.pddl");
    pddl::ProblemAst problem = test::load_problem("blocks-3.pddl", domain);
    task::GroundingOptions options;
    options.action_cap = 4;
    CHECK_THROWS_AS(task::ground(pddl::normalize(domain, problem), options),
                    task::GroundingExplosion);
}

TEST_CASE("ground: deterministic, including index assignment") {
    task::GroundTask a = test::ground_corpus("gripper-domain.pddl", "gripper-2.pddl");
    task::GroundTask b = test::ground_corpus("gripper-domain.pddl", "gripper-2.pddl");
    CHECK(a == b);
}

TEST_CASE("ground: surviving preconditions are relaxed-reachable") {
    std::vector<std::pair<std::string, std::string>> corpus = {
        {"blocks-domain.pddl", "blocks-3.pddl"},
        {"gripper-domain.pddl", "gripper-2.pddl"},
        {"gripper-domain.pddl", "gripper-4.pddl"},
        {"delivery-domain.pddl", "delivery-1.pddl"},
    };
    for (const auto& [domain_file, problem_file] : corpus) {
        task::GroundTask ground = test::ground_corpus(domain_file, problem_file);
        // Independent delete-free fixpoint over the ground actions.
        std::vector<char> reachable(ground.variables.size(), 0);
        for (size_t v = 0; v < ground.variables.size(); ++v)
            if (ground.initial_state[v] == 1)
                reachable[v] = 1;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& action : ground.actions) {
                bool applicable = true;
                for (const auto& vv : action.precondition)
                    if (vv.value == 1 && !reachable[vv.var])
                        applicable = false;
                if (!applicable)
                    continue;
                for (const auto& vv : action.effect)
                    if (vv.value == 1 && !reachable[vv.var]) {
                        reachable[vv.var] = 1;
                        changed = true;
                    }
            }
        }
        for (const auto& action : ground.actions)
            for (const auto& vv : action.precondition)
                if (vv.value == 1)
                    CHECK(reachable[vv.var]);
    }
}

TEST_CASE("parse_sas: hand-written flip task") {
    task::GroundTask flip = task::parse_sas(test::read_corpus("flip.sas"));
    CHECK(flip.variables.size() == 1);
    REQUIRE(flip.actions.size() == 1);
    CHECK(flip.actions[0].name == "(flip)");
    CHECK(flip.initial_state == task::State{0});
    REQUIRE(flip.goal.size() == 1);
    CHECK(flip.goal[0] == task::VarValue{0, 1});
}

TEST_CASE("parse_sas: gripper-2 variable count matches the declared count") {
    task::GroundTask gripper = task::parse_sas(test::read_corpus("gripper-2.sas"));
    CHECK(gripper.variables.size() == 5);  // declared in the corpus file header
    CHECK(gripper.actions.size() == 10);
    CHECK(gripper.mutex_groups.size() == 2);
    // Prevail conditions were merged into preconditions.
    const task::GroundAction* pick = nullptr;
    for (const auto& action : gripper.actions)
        if (action.name == "(pick ball1 rooma left)")
            pick = &action;
    REQUIRE(pick != nullptr);
    CHECK(pick->precondition.size() == 3);  // robby position + ball location + free gripper
}

TEST_CASE("parse_sas: fragment boundaries") {
    SUBCASE("axiom rule section") {
        std::string text = test::read_corpus("flip.sas");
        text.replace(text.rfind("0\n"), 2, "1\nbegin_rule\nend_rule\n");
        CHECK_THROWS_AS(task::parse_sas(text), task::UnsupportedSasFeature);
    }
    SUBCASE("conditional effect") {
        std::string text = test::read_corpus("flip.sas");
        text.replace(text.find("0 0 0 1"), 7, "1 0 0 0 0 1");
        CHECK_THROWS_AS(task::parse_sas(text), task::UnsupportedSasFeature);
    }
    SUBCASE("derived variable") {
        std::string text = test::read_corpus("flip.sas");
        text.replace(text.find("-1"), 2, "0");
        CHECK_THROWS_AS(task::parse_sas(text), task::UnsupportedSasFeature);
    }
    SUBCASE("non-unit cost") {
        std::string text = test::read_corpus("flip.sas");
        text.replace(text.rfind("1\nend_operator"), 1, "7");
        CHECK_THROWS_AS(task::parse_sas(text), task::UnsupportedSasFeature);
    }
    SUBCASE("malformed section") {
        CHECK_THROWS_AS(task::parse_sas("begin_version\n2\n"), Error);
        CHECK_THROWS_AS(task::parse_sas("nonsense"), task::SasParseError);
    }
}

TEST_CASE("sas round-trip: parse_sas(write_sas(t)) == t") {
    std::vector<task::GroundTask> tasks;
    tasks.push_back(task::parse_sas(test::read_corpus("flip.sas")));
    tasks.push_back(task::parse_sas(test::read_corpus("gripper-2.sas")));
    tasks.push_back(test::ground_corpus("blocks-domain.pddl", "blocks-3.pddl"));
    for (auto& original : tasks) {
        original.name = "sas-task";  // the reader synthesizes this name
        task::GroundTask reparsed = task::parse_sas(task::write_sas(original));
        CHECK(reparsed == original);
    }
}

TEST_CASE("apply: flip semantics") {
    task::GroundTask flip = task::parse_sas(test::read_corpus("flip.sas"));
    task::State state = flip.initial_state;
    std::vector<int> step = {0};
    task::State next = task::apply(flip, state, step);
    CHECK(next == task::State{1});

    SUBCASE("empty step is the identity") {
        CHECK(task::apply(flip, state, {}) == state);
    }
    SUBCASE("not applicable") {
        CHECK_THROWS_AS(task::apply(flip, next, step), task::ApplyError);
    }
}

TEST_CASE("apply: interference detection") {
    // Two operators setting the same variable to different values.
    std::string text = test::read_corpus("flip.sas");
    text.replace(text.find("1\nbegin_operator"), 1, "2");
    text.replace(text.rfind("0\n"), 2,
                 "begin_operator\nset2\n0\n1\n0 0 -1 0\n1\nend_operator\n0\n");
    // Make the variable 3-valued so the second operator is distinct.
    task::GroundTask t = task::parse_sas(text);
    REQUIRE(t.actions.size() == 2);
    std::vector<int> step = {0, 1};
    try {
        task::apply(t, t.initial_state, step);
        FAIL("expected interference");
    } catch (const task::ApplyError& e) {
        CHECK(e.kind == task::ApplyError::Kind::interference);
        CHECK(e.action_a == 0);
        CHECK(e.action_b == 1);
    }
}

TEST_CASE("apply: totality is preserved") {
    task::GroundTask gripper = task::parse_sas(test::read_corpus("gripper-2.sas"));
    std::mt19937_64 rng(7);
    task::State state = gripper.initial_state;
    for (int round = 0; round < 200; ++round) {
        std::vector<int> applicable;
        for (const auto& action : gripper.actions)
            if (task::applicable(gripper, state, action.id))
                applicable.push_back(action.id);
        if (applicable.empty())
            break;
        std::vector<int> step = {applicable[rng() % applicable.size()]};
        state = task::apply(gripper, state, step);
        REQUIRE(state.size() == gripper.variables.size());
        for (size_t v = 0; v < state.size(); ++v) {
            CHECK(state[v] >= 0);
            CHECK(state[v] < gripper.variables[v].domain_size);
        }
    }
}

TEST_CASE("validate_plan: empty plans") {
    task::GroundTask flip = task::parse_sas(test::read_corpus("flip.sas"));
    task::Plan empty;
    SUBCASE("goal unsatisfied at step 0") {
        auto error = task::validate_plan(flip, empty);
        REQUIRE(error.has_value());
        CHECK(error->step == 0);
    }
    SUBCASE("goal already satisfied") {
        task::GroundTask trivial = flip;
        trivial.goal = {{0, 0}};
        CHECK_FALSE(task::validate_plan(trivial, empty).has_value());
    }
}

TEST_CASE("validate_plan: accepts a correct plan and rejects a scrambled one") {
    task::GroundTask gripper = task::parse_sas(test::read_corpus("gripper-2.sas"));
    auto id_of = [&](const std::string& name) {
        for (const auto& action : gripper.actions)
            if (action.name == name)
                return action.id;
        FAIL("unknown action ", name);
        return -1;
    };
    task::Plan plan;
    plan.steps = {{id_of("(pick ball1 rooma left)")},
                  {id_of("(pick ball2 rooma right)")},
                  {id_of("(move rooma roomb)")},
                  {id_of("(drop ball1 roomb left)")},
                  {id_of("(drop ball2 roomb right)")}};
    CHECK_FALSE(task::validate_plan(gripper, plan).has_value());

    std::swap(plan.steps[0], plan.steps[2]);  // move before picking
    auto error = task::validate_plan(gripper, plan);
    REQUIRE(error.has_value());
    CHECK(error->step >= 0);
}

TEST_CASE("reachable_states: small pins") {
    SUBCASE("flip: 2 states") {
        task::GroundTask flip = task::parse_sas(test::read_corpus("flip.sas"));
        auto states = task::reachable_states(flip, 1000);
        REQUIRE(states.has_value());
        CHECK(states->size() == 2);
    }
    SUBCASE("no applicable actions: 1 state") {
        task::GroundTask flip = task::parse_sas(test::read_corpus("flip.sas"));
        flip.actions[0].precondition = {{0, 1}};  // requires the goal value already
        auto states = task::reachable_states(flip, 1000);
        REQUIRE(states.has_value());
        CHECK(states->size() == 1);
    }
    SUBCASE("blocksworld-3: regression pin from the oracle") {
        task::GroundTask ground = test::ground_corpus("blocks-domain.pddl", "blocks-3.pddl");
        auto states = task::reachable_states(ground, 100000);
        REQUIRE(states.has_value());
        // 13 hand-empty block arrangements plus 3 x 3 holding configurations.
        CHECK(states->size() == 22);
    }
    SUBCASE("overflow") {
        task::GroundTask ground = test::ground_corpus("blocks-domain.pddl", "blocks-3.pddl");
        CHECK_FALSE(task::reachable_states(ground, 5).has_value());
    }
}

TEST_CASE("plan text round-trip") {
    task::GroundTask gripper = task::parse_sas(test::read_corpus("gripper-2.sas"));
    task::Plan plan;
    plan.steps = {{2, 5}, {0}, {6, 9}};  // parallel picks, move, parallel drops
    std::string text = task::write_plan(gripper, plan);
    CHECK(text.find("; cost = 5") != std::string::npos);
    task::Plan reread = task::read_plan(gripper, text);
    CHECK(reread == plan);

    SUBCASE("unknown action name") {
        CHECK_THROWS_AS(task::read_plan(gripper, "(warp ball1)\n"), task::PlanParseError);
    }
}
