#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "ccgs/game.hpp"
#include "ccgs/gen.hpp"

using namespace ccgs;

namespace {

// Two agents, alphabets {a,b} and {x,y,z}, two states.
Game tiny() {
    Game g;
    g.m.num_agents = 2;
    g.m.state_names = {"s0", "s1"};
    g.m.initial = 0;
    g.m.action_names = {{"a", "b"}, {"x", "y", "z"}};
    g.m.available = {{{0, 1}, {0, 1, 2}}, {{0}, {1}}};
    g.m.transition = {{0, 1, 0, 1, 0, 1}, {-1, 1, -1, -1, -1, -1}};
    g.props = {"p"};
    g.labels = {{}, {0}};
    g.goals = {ltl::parse("F p"), ltl::parse("G !p")};
    return g;
}

}  // namespace

TEST_CASE("profile keys are mixed radix with agent 0 most significant") {
    Game g = tiny();
    CHECK(g.m.profile_key({0, 0}) == 0);
    CHECK(g.m.profile_key({0, 2}) == 2);
    CHECK(g.m.profile_key({1, 0}) == 3);
    CHECK(g.m.profile_key({1, 2}) == 5);
}

TEST_CASE("available profiles enumerate lexicographically") {
    Game g = tiny();
    auto ps = g.m.available_profiles(0);
    REQUIRE(ps.size() == 6);
    CHECK(ps.front() == Profile{0, 0});
    CHECK(ps[1] == Profile{0, 1});
    CHECK(ps.back() == Profile{1, 2});
    CHECK(g.m.available_profiles(1) == std::vector<Profile>{{0, 1}});
}

TEST_CASE("successor respects availability") {
    Game g = tiny();
    CHECK(successor(g.m, 0, {0, 1}) == 1);
    CHECK(successor(g.m, 1, {0, 1}) == 1);
    CHECK_THROWS_AS(successor(g.m, 1, {1, 1}), GameError);  // b unavailable at s1
    CHECK_THROWS_AS(successor(g.m, 1, {0, 0}), GameError);  // x unavailable at s1
}

TEST_CASE("validation accepts the base game") {
    CHECK_NOTHROW(validate_game(tiny()));
}

TEST_CASE("validation rejects structural damage") {
    auto broken = [](auto mutate) {
        Game g;
        g.m.num_agents = 2;
        g.m.state_names = {"s0", "s1"};
        g.m.initial = 0;
        g.m.action_names = {{"a", "b"}, {"x", "y", "z"}};
        g.m.available = {{{0, 1}, {0, 1, 2}}, {{0}, {1}}};
        g.m.transition = {{0, 1, 0, 1, 0, 1}, {-1, 1, -1, -1, -1, -1}};
        g.props = {"p"};
        g.labels = {{}, {0}};
        g.goals = {ltl::parse("F p"), ltl::parse("G !p")};
        mutate(g);
        CHECK_THROWS_AS(validate_game(g), GameError);
    };
    broken([](Game& g) { g.m.initial = 7; });
    broken([](Game& g) { g.m.available[0][0] = {1, 0}; });       // unsorted
    broken([](Game& g) { g.m.available[0][0] = {0, 0}; });       // duplicate
    broken([](Game& g) { g.m.available[0][0] = {0, 5}; });       // out of range
    broken([](Game& g) { g.m.available[1][1] = {}; });           // empty
    broken([](Game& g) { g.m.transition[0][1] = -1; });          // partial
    broken([](Game& g) { g.m.transition[1][0] = 0; });           // over-defined
    broken([](Game& g) { g.m.transition[0].pop_back(); });       // wrong row size
    broken([](Game& g) { g.m.transition[0][0] = 9; });           // bad target
    broken([](Game& g) { g.labels[1] = {4}; });                  // bad prop id
    broken([](Game& g) { g.goals[0] = ltl::parse("F q"); });     // undeclared atom
    broken([](Game& g) { g.goals[0] = nullptr; });
    broken([](Game& g) { g.labels.pop_back(); });
    broken([](Game& g) { g.weights = {{1, 1}, {1, 1}}; });       // weights on ltl
}

TEST_CASE("mean payoff flavour validation") {
    Game g = tiny();
    g.flavour = Flavour::MeanPayoff;
    g.props.clear();
    g.labels.clear();
    g.goals.clear();
    CHECK_THROWS_AS(validate_game(g), GameError);  // missing weights
    g.weights = {{1, -1}, {0, 2}};
    CHECK_NOTHROW(validate_game(g));
    g.labels = {{}, {}};
    CHECK_THROWS_AS(validate_game(g), GameError);  // ltl data on mp game
}

TEST_CASE("absorbing states and one-shot sink detection") {
    ExampleBundle ht = build_example("heads-tails");
    CHECK(ht.game.m.is_absorbing(1));
    CHECK(ht.game.m.is_absorbing(2));
    CHECK_FALSE(ht.game.m.is_absorbing(0));
    CHECK(is_one_shot_sink_game(ht.game.m));

    ExampleBundle coord = build_example("coordination");
    CHECK_FALSE(is_one_shot_sink_game(coord.game.m));

    // Sink-shaped except the initial state can re-enter itself: still one
    // decision round only if no successor of init is non-absorbing.
    ExampleBundle mp3 = build_example("mp-empty-core-3p");
    CHECK_FALSE(is_one_shot_sink_game(mp3.game.m));  // (h,t,t) stays at p
}

TEST_CASE("reachable states") {
    Game g = tiny();
    CHECK(g.m.reachable_states() == std::vector<StateId>{0, 1});
    ExampleBundle ht = build_example("heads-tails");
    CHECK(ht.game.m.reachable_states() == std::vector<StateId>{0, 1, 2});
}

TEST_CASE("error messages name the offender") {
    Game g = tiny();
    try {
        successor(g.m, 1, {1, 1});
        FAIL("expected a throw");
    } catch (const GameError& e) {
        std::string msg = e.what();
        CHECK(msg.find("s1") != std::string::npos);
    }
}
