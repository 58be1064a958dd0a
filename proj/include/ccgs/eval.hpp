#pragma once

#include <set>
#include <string>
#include <vector>

#include "ccgs/lasso.hpp"
#include "ccgs/ltl.hpp"

namespace ccgs {

// Exact LTL evaluation on the infinite word labels(stem).labels(loop)^omega.
// Dynamic programming over positions; Until is resolved on the loop by a
// doubled backward pass (any witness on a periodic word occurs within one
// period).
bool eval_on_lasso(const ltl::Formula& f, const Lasso& lasso,
                   const std::vector<std::set<std::string>>& labels_by_state);

// Convenience over a game's labelling; rejects inconsistent lassos.
bool eval_on_lasso(const ltl::Formula& f, const Lasso& lasso, const Game& game);

}  // namespace ccgs
