#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "ccgs/arena.hpp"
#include "ccgs/game.hpp"
#include "ccgs/lasso.hpp"
#include "ccgs/strategy.hpp"

namespace ccgs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;
using PayoffVector = std::vector<Rational>;

Rational rat(long long num, long long den = 1);
std::string rat_to_string(const Rational& r);

// Directed graph with an integer weight vector per edge. Parallel edges
// between a state pair are collapsed by the builders (the weight only
// depends on the source state in games, so collapsing is lossless).
struct WeightedGraph {
    int num_nodes = 0;
    int root = 0;
    struct Edge {
        int from, to;
        std::vector<long long> w;
    };
    std::vector<Edge> edges;

    std::vector<std::vector<int>> adjacency() const;  // edge indices by source
};

// Pushes per-state weights onto outgoing edges: (s, s') is an edge iff some
// available profile moves s to s', carrying (w_1(s), ..., w_n(s)).
WeightedGraph weights_to_edges(const Game& game);

// Mean payoff per agent of a lasso: the loop average, exact. The liminf of
// prefix averages of an ultimately periodic sequence is the loop mean.
PayoffVector mp_of_lasso(const std::vector<std::vector<long long>>& weights,
                         const Lasso& lasso);
PayoffVector mp_of_lasso(const Game& game, const Lasso& lasso);

// Karp's recurrence on weight coordinate `coord`, restricted to nodes
// reachable from the root. Throws GameError if that subgraph is acyclic.
Rational min_mean_cycle(const WeightedGraph& g, int coord);
Rational max_mean_cycle(const WeightedGraph& g, int coord);

// Johnson's algorithm. Each cycle is a node sequence with the start not
// repeated; cycles are emitted with their smallest node first.
std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedGraph& g);

// True iff some convex combination of the vectors dominates z componentwise
// (>= z, or > z when strict). Decided by an exact simplex maximising the
// minimum slack t; strict feasibility iff the optimum is positive.
bool hull_feasible(const std::vector<PayoffVector>& vectors,
                   const PayoffVector& z, bool strict);

// Two-player multi-dimensional mean-payoff threshold game on an edge-weighted
// graph. player1[v] says who owns node v.
struct MultiMpGame {
    int num_nodes = 0;
    int root = 0;
    std::vector<bool> player1;
    std::vector<WeightedGraph::Edge> edges;
    PayoffVector threshold;

    int dim() const { return static_cast<int>(threshold.size()); }
};

// Can player 1 force mp >= threshold (or > when strict) in every coordinate?
// Enumerates player-2 memoryless maps; for each residual graph player 1 wins
// iff some reachable SCC's cycle-mean hull is feasible against the threshold.
bool solve_threshold(const MultiMpGame& g, bool strict = false);

// Reduction of "C can guarantee z_C" to a threshold game: player-1 nodes are
// game states where C picks a_C, player-2 nodes are (s, a_C) pairs where the
// rest complete the profile. Both edge layers carry w_C(s), so each state's
// weight appears twice on a cycle of doubled length and the mean is unchanged.
MultiMpGame lower_bound_game(const Game& game, const std::vector<int>& coalition,
                             const PayoffVector& z);
bool is_lower_bound(const Game& game, const std::vector<int>& coalition,
                    const PayoffVector& z, bool strict = false);

// Exact deviation test for memoryless data: true iff every member of C gets
// strictly more than their payoff under `profile` no matter how Ag\C reacts
// to the fixed deviation (worst case = min mean cycle of the restriction).
bool mp_is_beneficial_deviation(const Game& game, const StrategyProfile& profile,
                                const std::vector<int>& coalition,
                                const std::vector<Strategy>& deviation);

struct MpDeviation {
    std::vector<int> coalition;
    std::vector<Strategy> strategies;  // memoryless, aligned with coalition
};

// Search over coalitions (increasing size) and memoryless deviations. The
// deviation space is explored lazily, branching on classes of coalition
// actions with equal successor sets at states reached so far, so games whose
// raw strategy count is astronomical but whose branching is small (such as
// the satisfiability gadgets) stay tractable.
std::optional<MpDeviation> mp_beneficial_deviation_exists(
    const Game& game, const StrategyProfile& profile);

// True iff no coalition has a memoryless beneficial deviation. Deviations
// that mix several cycles of one component need memory and are not covered;
// lower_bound_characterisation below decides the unrestricted notion.
bool mp_core_membership(const Game& game, const StrategyProfile& profile);

struct MpECoreResult {
    StrategyProfile profile;
    PayoffVector payoff;
};

// First memoryless profile in enumeration order passing mp_core_membership.
std::optional<MpECoreResult> mp_e_core(const Game& game);

// True iff no coalition can guarantee strictly more than the lasso's payoff
// for all of its members; equivalent to core membership of profiles inducing
// the lasso.
bool lower_bound_characterisation(const Game& game, const Lasso& lasso);

}  // namespace ccgs
