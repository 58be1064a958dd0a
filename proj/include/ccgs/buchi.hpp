#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ccgs/arena.hpp"
#include "ccgs/lasso.hpp"
#include "ccgs/ltl.hpp"

namespace ccgs {

// Nondeterministic Buchi automaton over letters = sets of propositions.
// Transitions carry symbolic letter constraints: a letter L is read by an
// edge iff pos subset-of L and neg disjoint from L.
struct BuchiEdge {
    int from;
    int to;
    std::set<std::string> pos;
    std::set<std::string> neg;
};

struct BuchiAutomaton {
    int num_states = 0;
    std::vector<int> initial;
    std::set<std::string> alphabet;  // propositions of the source formula
    std::vector<BuchiEdge> edges;
    std::set<int> accepting;

    // Acceptance of the ultimately periodic word stem.loop^omega.
    bool accepts(const std::vector<std::set<std::string>>& stem,
                 const std::vector<std::set<std::string>>& loop) const;
};

// Tableau translation (on-the-fly, generalized then degeneralized).
BuchiAutomaton to_buchi(const ltl::Formula& f);

// Witness lasso from the arena's initial state satisfying f, if any.
// Nested-DFS emptiness on arena x to_buchi(f); exact and complete. The
// returned lasso is over game states (arena projection) and always verifies
// under eval_on_lasso.
std::optional<Lasso> exists_path(const Arena& arena, const ltl::Formula& f);

}  // namespace ccgs
