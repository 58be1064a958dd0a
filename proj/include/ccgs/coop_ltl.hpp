#pragma once

#include <optional>
#include <vector>

#include "ccgs/game.hpp"
#include "ccgs/strategy.hpp"
#include "ccgs/verdict.hpp"

namespace ccgs {

// Exact alpha-style check: HOLDS iff C are all losers of profile's run and
// the deviation wins for all of C against every behaviour of Ag\C.
Verdict is_beneficial_deviation(const Game& game, const StrategyProfile& profile,
                                const std::vector<int>& coalition,
                                const std::vector<Strategy>& deviation);

// Bounded search for a joint <=k-state winning strategy for C. HOLDS is
// unconditionally correct; exhaustion at bound k is reported as
// BOUND_LIMITED(k), never as a definitive no.
Verdict is_fulfilled(const Game& game, const std::vector<int>& coalition, int k);

// FAILS (with the fulfilled loser coalition's witness) if any subset of the
// run's losers is fulfilled at bound k; HOLDS when provably exact (no losers,
// or one-shot sink game), else BOUND_LIMITED(k).
Verdict core_membership(const Game& game, const StrategyProfile& profile, int k);

Verdict e_core(const Game& game, const ltl::Formula& phi, int k);
Verdict a_core(const Game& game, const ltl::Formula& phi, int k);

// Strong (credible-punishment) variant: the deviation must also succeed
// against the non-deviators' actual strategies, and only punishments keeping
// every original winner winning count.
Verdict is_strong_beneficial_deviation(const Game& game,
                                       const StrategyProfile& profile,
                                       const std::vector<int>& coalition,
                                       const std::vector<Strategy>& deviation);

Verdict strong_core_membership(const Game& game, const StrategyProfile& profile,
                               int k);

struct StrongCoreRow {
    StrategyProfile profile;
    std::vector<ActionId> initial_actions;  // per agent, at the start state
    WinnerSet winner_set;
    Verdict verdict;  // strong_core_membership of the profile
};

struct StrongCoreReport {
    bool empty_at_bound = true;
    bool exact = false;  // true when the bound is exhaustive for this game
    std::vector<StrongCoreRow> rows;
};

// Enumerates all <=k-memory profiles (quotiented to effective choices on
// one-shot sink games), running strong_core_membership on each.
// jobs > 1 splits the profile stream across threads with deterministic merge.
StrongCoreReport strong_core_empty_search(const Game& game, int k, int jobs = 1);

// Constructive core iteration: repeatedly adopt a witness strategy of any
// fulfilled loser coalition until no beneficial deviation remains. Returns
// the visited profiles; the last one is the core member reached.
std::vector<StrategyProfile> core_iterate(const Game& game,
                                          StrategyProfile start, int k,
                                          int max_steps);

}  // namespace ccgs
