#pragma once

#include <string>
#include <vector>

#include "ccgs/game.hpp"

namespace ccgs {

// Ultimately periodic run u.v^omega over game states.
struct Lasso {
    std::vector<StateId> stem;  // may be empty
    std::vector<StateId> loop;  // non-empty

    StateId at(std::size_t t) const {
        if (t < stem.size()) return stem[t];
        return loop[(t - stem.size()) % loop.size()];
    }
    std::size_t period_start() const { return stem.size(); }
    bool operator==(const Lasso& other) const = default;
};

// Every consecutive pair (including stem->loop junction and loop wrap) must
// be connected by some available profile.
bool successor_consistent(const ConcurrentGameStructure& m, const Lasso& l);

std::string lasso_to_string(const Game& game, const Lasso& l);

}  // namespace ccgs
