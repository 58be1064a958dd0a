#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ccgs/game.hpp"
#include "ccgs/mp.hpp"
#include "ccgs/strategy.hpp"

namespace ccgs {

struct ExampleBundle {
    Game game;
    // Named memoryless profiles used by the regression suites.
    std::map<std::string, StrategyProfile> profiles;
};

// Built-in benchmark games:
//   coordination           2 players set p/q each round, goals G(p & q)
//   heads-tails            1 coin player + 2 spectators with opposed goals
//   non-credible           2 players, one round into three sinks
//   empty-strong-core-4p   4 players, 16 one-shot outcomes, empty strong core
//   mp-empty-core-3p       3 players cycling through weighted sinks
ExampleBundle build_example(const std::string& name);
std::vector<std::string> example_names();

// 3-CNF over variables 1..n; a literal is +v or -v.
struct Cnf {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

Cnf parse_dimacs(const std::string& text);

// One player per clause; all players walk a variable chain, collecting
// weight 1 at x_v (resp. the complement state) when the clause contains that
// literal. Deviating to the chain beats the reference all-to-detour profile
// for the grand coalition iff the formula is satisfiable.
std::pair<Game, StrategyProfile> cnf_to_mp_game(const Cnf& cnf);

// Hardness-direction reduction: (k+1)-player concurrent game such that
// {1..k} has threshold z as a lower bound iff player 1 wins the input game.
struct ThresholdReduction {
    Game game;
    std::vector<int> coalition;
    PayoffVector z;
};
ThresholdReduction threshold_to_mp_game(const MultiMpGame& g);

struct RandomGameParams {
    int agents = 2;     // <= 4
    int states = 4;     // <= 6 (sink families derive their own state count)
    int actions = 2;    // <= 3
    int max_weight = 3; // mp family, weights in [-max_weight, max_weight]
};

// Seed-deterministic families: "sink-ltl" (one decision round into absorbing
// sinks, goals are X-guarded sink labels, so memoryless search is exact),
// "general-ltl", and "mp".
Game random_game(const std::string& family, const RandomGameParams& params,
                 std::uint64_t seed);

// Random formula over the given atoms, size bounded by `size`.
ltl::Formula random_formula(const std::vector<std::string>& atoms, int size,
                            std::uint64_t seed);

MultiMpGame random_threshold_game(int nodes, int dim, int max_weight,
                                  std::uint64_t seed);

}  // namespace ccgs
