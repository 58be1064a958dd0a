#pragma once

#include <set>
#include <string>
#include <vector>

#include "ccgs/game.hpp"
#include "ccgs/strategy.hpp"

namespace ccgs {

// One-player product arena: game states paired with the machine states of a
// coalition whose behaviour is fixed. Paths of the arena are exactly the runs
// achievable by the free agents against the fixed machines. Labels and
// weights are inherited through the projection to game states.
struct Arena {
    const Game* game = nullptr;
    int initial = 0;
    std::vector<std::vector<int>> succ;  // sorted, deduplicated
    std::vector<StateId> project;        // arena state -> game state

    int num_states() const { return static_cast<int>(succ.size()); }
    std::set<std::string> label_names(int v) const {
        return game->label_names(project[v]);
    }
    long long weight(int agent, int v) const {
        return game->weights[agent][project[v]];
    }
    Lasso project_lasso(const std::vector<int>& stem,
                        const std::vector<int>& loop) const;
};

// Theorem-style restriction M_C: fix one machine per member of C; the free
// agents are Ag\C. Only reachable product states are materialised. Throws
// GameError if a machine outputs an unavailable action at a reachable state.
Arena restrict_game(const Game& game, const std::vector<int>& coalition,
                    const std::vector<Strategy>& machines);

// The unrestricted structure viewed as an arena (C = empty set).
Arena arena_of(const Game& game);

}  // namespace ccgs
