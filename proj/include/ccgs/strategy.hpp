#pragma once

#include <set>
#include <string>
#include <vector>

#include "ccgs/game.hpp"
#include "ccgs/lasso.hpp"

namespace ccgs {

// Finite-state transducer strategy. The action may depend on the current
// game state as well as the machine state, so a 1-state machine is exactly a
// memoryless strategy St -> Ac.
struct Strategy {
    int num_states = 1;
    // act[q][s]: action played in machine state q at game state s
    // nxt[q][s]: machine state after observing game state s
    std::vector<std::vector<ActionId>> act;
    std::vector<std::vector<int>> nxt;

    bool operator==(const Strategy&) const = default;
    bool memoryless() const { return num_states == 1; }

    static Strategy memoryless_from(const std::vector<ActionId>& map);
};

using StrategyProfile = std::vector<Strategy>;  // one per agent

struct WinnerSet {
    std::set<int> winners;  // agent indices, 0-based
    std::set<int> losers;
};

// The unique induced run, detected at the first repeated joint configuration
// (game state, machine state vector).
Lasso run_of(const Game& game, const StrategyProfile& profile);

// Agents whose goal holds on the lasso (LTL flavour only).
WinnerSet winners(const Game& game, const Lasso& lasso);

// Deterministic enumeration of joint memoryless strategies for a coalition,
// lexicographic over (member order, state order, action order).
class MemorylessEnumerator {
public:
    MemorylessEnumerator(const Game& game, std::vector<int> coalition);
    long long size() const { return total_; }
    std::vector<Strategy> at(long long index) const;

private:
    const Game* game_;
    std::vector<int> coalition_;
    long long total_;
};

// Canonical representatives of machines with <= k states per member:
// all states reachable from the initial state, behaviourally minimal, and in
// BFS-canonical state order (so the stream is duplicate-free under machine
// isomorphism and, more strongly, under output-behaviour equivalence).
class MachineEnumerator {
public:
    MachineEnumerator(const Game& game, std::vector<int> coalition, int k);
    long long size() const;
    std::vector<Strategy> at(long long index) const;

private:
    const Game* game_;
    std::vector<int> coalition_;
    std::vector<std::vector<Strategy>> per_member_;  // canonical machine lists
};

// All canonical machines with <= k states for one agent (exposed for tests
// and for joint enumeration).
std::vector<Strategy> canonical_machines(const Game& game, int agent, int k);

}  // namespace ccgs
