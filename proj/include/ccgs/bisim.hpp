#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ccgs/game.hpp"

namespace ccgs {

struct BisimRelation {
    // Pairs (state of a, state of b), including the initial pair.
    std::set<std::pair<StateId, StateId>> pairs;
};

// Coarsest label-preserving bisimulation containing the initial pair, by
// partition refinement on the disjoint union (split on labels, then on the
// successor block under each concrete action profile). Availability
// differences make states non-bisimilar. Throws GameError when agent counts,
// action alphabets, or proposition alphabets differ.
std::optional<BisimRelation> bisimilar(const Game& a, const Game& b);

// Independent pair-by-pair check of the four defining conditions; used by
// tests to validate the refinement output without trusting it.
bool is_bisimulation(const Game& a, const Game& b, const BisimRelation& rel);

}  // namespace ccgs
