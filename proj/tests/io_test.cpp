#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "ccgs/gen.hpp"
#include "ccgs/io.hpp"
#include "ccgs/strategy.hpp"

using namespace ccgs;
using nlohmann::json;

namespace {

const char* kDemo = R"(# demo game
game ltl
agents 2
states s0 s1
init s0

actions 1 @ * : a b
actions 2 @ * : x
actions 1 @ s1 : a
label s1 : p
trans s0 (a,x) -> s1
trans s0 (b,x) -> s0
trans s1 (a,x) -> s1
goal 1 : F p
goal 2 : G !p
)";

int expect_error_line(const std::string& text) {
    try {
        parse_game(text);
    } catch (const ParseFileError& e) {
        return e.line;
    }
    FAIL("expected a parse error");
    return -1;
}

}  // namespace

TEST_CASE("hand-written game parses to the expected structure") {
    Game g = parse_game(kDemo);
    CHECK(g.flavour == Flavour::Ltl);
    CHECK(g.m.num_agents == 2);
    CHECK(g.m.state_names == std::vector<std::string>{"s0", "s1"});
    CHECK(g.m.initial == 0);
    CHECK(g.m.action_names[0] == std::vector<std::string>{"a", "b"});
    CHECK(g.m.action_names[1] == std::vector<std::string>{"x"});
    CHECK(g.m.available[0][0] == std::vector<ActionId>{0, 1});
    CHECK(g.m.available[1][0] == std::vector<ActionId>{0});  // per-state override
    CHECK(g.props == std::vector<std::string>{"p"});
    CHECK(g.label_names(1) == std::set<std::string>{"p"});
    CHECK(successor(g.m, 0, {0, 0}) == 1);
    CHECK(successor(g.m, 0, {1, 0}) == 0);
    CHECK(ltl::structurally_equal(g.goals[0], ltl::parse("F p")));
    CHECK(ltl::structurally_equal(g.goals[1], ltl::parse("G !p")));
}

TEST_CASE("propositions can come from goals alone and are sorted") {
    std::string text = R"(game ltl
agents 1
states s0
init s0
actions 1 @ * : a
trans s0 (a) -> s0
goal 1 : F (zz | aa)
)";
    Game g = parse_game(text);
    CHECK(g.props == std::vector<std::string>{"aa", "zz"});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(expect_error_line("game ltl\nbogus directive\n") == 2);
    // conflicting transition (redefining a profile with the same target is
    // tolerated, redirecting it is not)
    std::string dup = kDemo;
    dup += "trans s1 (a,x) -> s0\n";
    CHECK(expect_error_line(dup) == 16);
    // unknown state in a transition
    CHECK(expect_error_line(std::string(kDemo) + "trans s9 (a,x) -> s0\n") == 16);
    // transitions before states are declared
    CHECK(expect_error_line("game ltl\ntrans a (x) -> b\n") == 2);
    // unavailable action
    std::string bad = kDemo;
    bad += "trans s1 (b,x) -> s1\n";
    CHECK(expect_error_line(bad) == 16);
    // goal for an agent out of range
    CHECK(expect_error_line(std::string(kDemo) + "goal 3 : true\n") == 16);
    // mp game without weights fails validation at the end
    CHECK_THROWS_AS(
        parse_game("game mp\nagents 1\nstates s\ninit s\nactions 1 @ * : a\n"
                   "trans s (a) -> s\n"),
        ParseFileError);
}

TEST_CASE("printing then parsing is the identity on the examples") {
    for (const std::string& name : example_names()) {
        Game g = build_example(name).game;
        std::string text = print_game(g);
        Game h = parse_game(text);
        CHECK(h.flavour == g.flavour);
        CHECK(h.m.state_names == g.m.state_names);
        CHECK(h.m.initial == g.m.initial);
        CHECK(h.m.action_names == g.m.action_names);
        CHECK(h.m.available == g.m.available);
        CHECK(h.m.transition == g.m.transition);
        CHECK(h.weights == g.weights);
        for (int s = 0; s < g.m.num_states(); ++s)
            CHECK(h.label_names(s) == g.label_names(s));
        REQUIRE(h.goals.size() == g.goals.size());
        for (std::size_t i = 0; i < g.goals.size(); ++i)
            CHECK(ltl::structurally_equal(h.goals[i], g.goals[i]));
        // and the printed form is a fixpoint
        CHECK(print_game(h) == text);
    }
}

TEST_CASE("printing then parsing is the identity on random games") {
    RandomGameParams params;
    params.agents = 3;
    params.states = 4;
    params.actions = 2;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (const char* family : {"sink-ltl", "general-ltl", "mp"}) {
            Game g = random_game(family, params, seed);
            std::string text = print_game(g);
            CHECK(print_game(parse_game(text)) == text);
        }
    }
}

TEST_CASE("memoryless strategies round trip exactly") {
    Game g = build_example("heads-tails").game;
    Strategy coin = Strategy::memoryless_from({1, 0, 0});
    std::string text = print_strategies(g, {{0, coin}});
    auto back = parse_strategies(text, g);
    REQUIRE(back.size() == 1);
    CHECK(back[0].first == 0);
    CHECK(back[0].second == coin);
}

TEST_CASE("machine strategies round trip behaviourally") {
    ExampleBundle coord = build_example("coordination");
    const Game& g = coord.game;
    Strategy alternate;
    alternate.num_states = 2;
    alternate.act = {std::vector<ActionId>(4, 0), std::vector<ActionId>(4, 1)};
    alternate.nxt = {std::vector<int>(4, 1), std::vector<int>(4, 0)};
    StrategyProfile profile = {alternate, coord.profiles.at("all-true")[1]};

    std::string text =
        print_strategies(g, {{0, profile[0]}, {1, profile[1]}});
    StrategyProfile back = parse_profile(text, g);
    Lasso original = run_of(g, profile);
    Lasso reparsed = run_of(g, back);
    CHECK(original.stem == reparsed.stem);
    CHECK(original.loop == reparsed.loop);
}

TEST_CASE("profile files must cover every agent exactly once") {
    Game g = build_example("non-credible").game;
    std::string one = print_strategies(g, {{0, Strategy::memoryless_from(
                                                   {0, 0, 0, 0})}});
    CHECK_THROWS_AS(parse_profile(one, g), ParseFileError);
    std::string twice = one + one;
    CHECK_THROWS_AS(parse_profile(twice, g), ParseFileError);
}

TEST_CASE("verdict serialisation, field for field") {
    Game g = build_example("heads-tails").game;

    Verdict holds;
    holds.status = Status::Holds;
    holds.lasso = Lasso{{0}, {1}};
    holds.bound = 2;
    json h = json::parse(verdict_to_json(g, holds));
    CHECK(h["status"] == "HOLDS");
    CHECK(h["bound"] == 2);
    CHECK(h["witness"]["lasso"]["stem"] == json::array({"start"}));
    CHECK(h["witness"]["lasso"]["loop"] == json::array({"up"}));

    Verdict fails;
    fails.status = Status::Fails;
    fails.deviation = CoalitionStrategies{
        {1}, {Strategy::memoryless_from({0, 0, 0})}};
    json f = json::parse(verdict_to_json(g, fails));
    CHECK(f["status"] == "FAILS");
    CHECK(f["witness"]["coalition"] == json::array({2}));  // 1-based outside
    std::string dev = f["witness"]["deviation"].get<std::string>();
    CHECK(dev.find("strategy 2") != std::string::npos);
    auto parsed = parse_strategies(dev, g);
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].first == 1);

    Verdict limited;
    limited.status = Status::BoundLimited;
    limited.bound = 3;
    json l = json::parse(verdict_to_json(g, limited));
    CHECK(l["status"] == "BOUND_LIMITED");
    CHECK(l["witness"].is_null());
    CHECK(l["bound"] == 3);
}

TEST_CASE("file helpers") {
    std::string path = "io_test_scratch.txt";
    write_file(path, "alpha\n");
    CHECK(read_file(path) == "alpha\n");
    CHECK_THROWS(read_file("definitely/not/here.txt"));
}
