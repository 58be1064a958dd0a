#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ccgs/bisim.hpp"
#include "ccgs/gen.hpp"

using namespace ccgs;

namespace {

// One agent; a and b branch into two absorbing states carrying the same
// label, so the branches are indistinguishable.
Game split() {
    Game g;
    g.m.num_agents = 1;
    g.m.state_names = {"s0", "left", "right"};
    g.m.initial = 0;
    g.m.action_names = {{"a", "b"}};
    g.m.available = {{{0, 1}}, {{0}}, {{0}}};
    g.m.transition = {{1, 2}, {1, -1}, {2, -1}};
    g.props = {"p"};
    g.labels = {{}, {0}, {0}};
    g.goals = {ltl::parse("F p")};
    validate_game(g);
    return g;
}

// The same behaviour with the two branches merged.
Game merged() {
    Game g;
    g.m.num_agents = 1;
    g.m.state_names = {"s0", "sink"};
    g.m.initial = 0;
    g.m.action_names = {{"a", "b"}};
    g.m.available = {{{0, 1}}, {{0}}};
    g.m.transition = {{1, 1}, {1, -1}};
    g.props = {"p"};
    g.labels = {{}, {0}};
    g.goals = {ltl::parse("F p")};
    validate_game(g);
    return g;
}

}  // namespace

TEST_CASE("every game is bisimilar to itself") {
    for (const std::string& name : example_names()) {
        Game g = build_example(name).game;
        auto rel = bisimilar(g, g);
        REQUIRE(rel.has_value());
        CHECK(rel->pairs.count({g.m.initial, g.m.initial}) == 1);
        CHECK(is_bisimulation(g, g, *rel));
    }
}

TEST_CASE("duplicated branches collapse") {
    Game a = split();
    Game b = merged();
    auto rel = bisimilar(a, b);
    REQUIRE(rel.has_value());
    CHECK(is_bisimulation(a, b, *rel));
    // Both absorbing states of the split game match the single sink.
    CHECK(rel->pairs.count({1, 1}) == 1);
    CHECK(rel->pairs.count({2, 1}) == 1);
    // And symmetrically from the other side.
    auto rev = bisimilar(b, a);
    REQUIRE(rev.has_value());
    CHECK(is_bisimulation(b, a, *rev));
}

TEST_CASE("label differences separate states") {
    Game a = split();
    Game b = split();
    b.labels[2] = {};  // right branch loses p
    CHECK_FALSE(bisimilar(a, b).has_value());
    CHECK(bisimilar(b, b).has_value());  // still self-bisimilar
}

TEST_CASE("availability differences separate states") {
    Game a = split();
    Game b = split();
    b.m.available[1] = {{0, 1}};
    b.m.transition[1] = {1, 1};
    validate_game(b);
    CHECK_FALSE(bisimilar(a, b).has_value());
}

TEST_CASE("transition structure matters even with equal labels") {
    Game a = merged();
    Game b = merged();
    // Send b's action b back to the start: F p no longer forced on that path.
    b.m.transition[0] = {1, 0};
    validate_game(b);
    CHECK_FALSE(bisimilar(a, b).has_value());
}

TEST_CASE("weights are observable in mean-payoff games") {
    Game a = build_example("mp-empty-core-3p").game;
    Game b = a;
    b.weights[0][1] += 1;
    CHECK(bisimilar(a, a).has_value());
    CHECK_FALSE(bisimilar(a, b).has_value());
}

TEST_CASE("incompatible structures are rejected outright") {
    Game a = split();
    Game agents = build_example("heads-tails").game;
    CHECK_THROWS_AS(bisimilar(a, agents), GameError);

    Game alphabet = split();
    alphabet.m.action_names[0][1] = "c";
    CHECK_THROWS_AS(bisimilar(a, alphabet), GameError);

    Game props = split();
    props.props = {"q"};
    props.goals = {ltl::parse("F q")};
    CHECK_THROWS_AS(bisimilar(a, props), GameError);
}

TEST_CASE("the checker rejects bogus relations") {
    Game a = split();
    Game b = merged();
    BisimRelation missing_init;
    missing_init.pairs = {{1, 1}};
    CHECK_FALSE(is_bisimulation(a, b, missing_init));

    BisimRelation wrong;
    wrong.pairs = {{0, 0}, {0, 1}};  // start paired with the labelled sink
    CHECK_FALSE(is_bisimulation(a, b, wrong));

    BisimRelation shallow;
    shallow.pairs = {{0, 0}};  // initial pair alone, successors uncovered
    CHECK_FALSE(is_bisimulation(a, b, shallow));
}
