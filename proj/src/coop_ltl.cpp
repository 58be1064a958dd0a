#include "ccgs/coop_ltl.hpp"

#include <algorithm>
#include <thread>

#include "ccgs/arena.hpp"
#include "ccgs/buchi.hpp"
#include "ccgs/eval.hpp"

namespace ccgs {

namespace {

// Non-empty subsets of `pool`, ordered by increasing size, then
// lexicographically by member index.
std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& pool,
                                              bool increasing) {
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(pool.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(pool[i]);
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](const std::vector<int>& a, const std::vector<int>& b) {
                         return increasing ? a.size() < b.size() : a.size() > b.size();
                     });
    return out;
}

ltl::Formula losers_escape(const Game& game, const std::vector<int>& coalition) {
    std::vector<ltl::Formula> parts;
    for (int j : coalition) parts.push_back(ltl::mk_not(game.goals[j]));
    return ltl::disj_all(parts);
}

StrategyProfile merged_profile(const StrategyProfile& base,
                               const std::vector<int>& coalition,
                               const std::vector<Strategy>& replacement) {
    StrategyProfile out = base;
    for (std::size_t ci = 0; ci < coalition.size(); ++ci)
        out[coalition[ci]] = replacement[ci];
    return out;
}

}  // namespace

Verdict is_beneficial_deviation(const Game& game, const StrategyProfile& profile,
                                const std::vector<int>& coalition,
                                const std::vector<Strategy>& deviation) {
    if (coalition.empty()) throw GameError("deviating coalition must be non-empty");
    Lasso run = run_of(game, profile);
    WinnerSet ws = winners(game, run);
    for (int i : coalition)
        if (ws.winners.count(i)) {
            Verdict v;
            v.status = Status::Fails;
            v.agent = i;
            v.note = "coalition member already wins under the current profile";
            return v;
        }
    Arena arena = restrict_game(game, coalition, deviation);
    if (auto bad = exists_path(arena, losers_escape(game, coalition))) {
        Verdict v;
        v.status = Status::Fails;
        v.lasso = *bad;
        v.note = "counter-play defeats some deviator";
        return v;
    }
    Verdict v;
    v.status = Status::Holds;
    v.deviation = CoalitionStrategies{coalition, deviation};
    return v;
}

Verdict is_fulfilled(const Game& game, const std::vector<int>& coalition, int k) {
    if (coalition.empty()) throw GameError("coalition must be non-empty");
    if (k < 1) throw GameError("memory bound must be at least 1");
    ltl::Formula escape = losers_escape(game, coalition);
    MachineEnumerator machines(game, coalition, k);
    for (long long idx = 0; idx < machines.size(); ++idx) {
        std::vector<Strategy> joint = machines.at(idx);
        Arena arena = restrict_game(game, coalition, joint);
        if (!exists_path(arena, escape)) {
            Verdict v;
            v.status = Status::Holds;
            v.deviation = CoalitionStrategies{coalition, std::move(joint)};
            v.bound = k;
            return v;
        }
    }
    Verdict v;
    v.status = Status::BoundLimited;
    v.bound = k;
    v.note = "no winning coalition strategy with at most " + std::to_string(k) +
             " memory states";
    return v;
}

Verdict core_membership(const Game& game, const StrategyProfile& profile, int k) {
    Lasso run = run_of(game, profile);
    WinnerSet ws = winners(game, run);
    if (ws.losers.empty()) {
        Verdict v;
        v.status = Status::Holds;
        v.lasso = run;
        v.note = "every agent wins, so no loser coalition exists";
        return v;
    }
    std::vector<int> losers(ws.losers.begin(), ws.losers.end());
    for (const std::vector<int>& sub : subsets_by_size(losers, true)) {
        Verdict f = is_fulfilled(game, sub, k);
        if (f.holds()) {
            // A fulfilled loser coalition is exactly a beneficial deviation.
            f.status = Status::Fails;
            f.note = "fulfilled loser coalition deviates";
            return f;
        }
    }
    Verdict v;
    v.bound = k;
    if (is_one_shot_sink_game(game.m)) {
        v.status = Status::Holds;
        v.lasso = run;
        v.note = "exhaustive at bound on a one-shot sink game";
    } else {
        v.status = Status::BoundLimited;
        v.note = "no deviation within the memory bound";
    }
    return v;
}

Verdict e_core(const Game& game, const ltl::Formula& phi, int k) {
    std::vector<int> all;
    for (int i = 0; i < game.m.num_agents; ++i) all.push_back(i);
    Arena whole = arena_of(game);
    bool sink_exact = is_one_shot_sink_game(game.m);
    bool any_bound_limited = false;

    // W = Ag first: core members maximise winners in practice, and the
    // winner-pattern path check alone is decisive there.
    std::vector<std::vector<int>> wsets = subsets_by_size(all, false);
    wsets.push_back({});  // W may be empty
    for (const std::vector<int>& w : wsets) {
        std::vector<char> in_w(game.m.num_agents, 0);
        for (int i : w) in_w[i] = 1;
        std::vector<ltl::Formula> parts{phi};
        for (int i = 0; i < game.m.num_agents; ++i)
            parts.push_back(in_w[i] ? game.goals[i] : ltl::mk_not(game.goals[i]));
        auto witness = exists_path(whole, ltl::conj_all(parts));
        if (!witness) continue;

        std::vector<int> rest;
        for (int i = 0; i < game.m.num_agents; ++i)
            if (!in_w[i]) rest.push_back(i);
        bool blocked = false;
        bool certified = true;
        for (const std::vector<int>& l : subsets_by_size(rest, true)) {
            Verdict f = is_fulfilled(game, l, k);
            if (f.holds()) {
                blocked = true;  // winners of a core run must meet l
                break;
            }
            if (!sink_exact) certified = false;
        }
        if (blocked) continue;
        if (certified) {
            Verdict v;
            v.status = Status::Holds;
            v.lasso = *witness;
            v.bound = k;
            return v;
        }
        any_bound_limited = true;
    }
    Verdict v;
    v.bound = k;
    if (any_bound_limited) {
        v.status = Status::BoundLimited;
        v.note = "candidate winner sets remain uncertified at the memory bound";
    } else {
        v.status = Status::Fails;
        v.note = "no realisable winner pattern is compatible with the formula";
    }
    return v;
}

Verdict a_core(const Game& game, const ltl::Formula& phi, int k) {
    Verdict dual = e_core(game, ltl::mk_not(phi), k);
    Verdict v;
    v.bound = dual.bound;
    switch (dual.status) {
        case Status::Holds:
            v.status = Status::Fails;
            v.lasso = dual.lasso;  // core run violating phi
            v.note = "core run falsifies the formula";
            break;
        case Status::Fails:
            v.status = Status::Holds;
            v.note = "no core run falsifies the formula";
            break;
        case Status::BoundLimited:
            v.status = Status::BoundLimited;
            v.note = dual.note;
            break;
    }
    return v;
}

Verdict is_strong_beneficial_deviation(const Game& game,
                                       const StrategyProfile& profile,
                                       const std::vector<int>& coalition,
                                       const std::vector<Strategy>& deviation) {
    if (coalition.empty()) throw GameError("deviating coalition must be non-empty");
    Lasso run0 = run_of(game, profile);
    WinnerSet ws0 = winners(game, run0);
    for (int i : coalition)
        if (ws0.winners.count(i)) {
            Verdict v;
            v.status = Status::Fails;
            v.agent = i;
            v.note = "coalition member already wins under the current profile";
            return v;
        }
    // Against the non-deviators' actual strategies, all of C must now win.
    StrategyProfile merged = merged_profile(profile, coalition, deviation);
    Lasso run1 = run_of(game, merged);
    WinnerSet ws1 = winners(game, run1);
    for (int i : coalition)
        if (!ws1.winners.count(i)) {
            Verdict v;
            v.status = Status::Fails;
            v.agent = i;
            v.note = "deviation does not win against the unchanged opponents";
            return v;
        }
    // Credible punishments keep the original winners winning while defeating
    // some deviator.
    std::vector<ltl::Formula> parts;
    for (int i : ws0.winners) parts.push_back(game.goals[i]);
    parts.push_back(losers_escape(game, coalition));
    Arena arena = restrict_game(game, coalition, deviation);
    if (auto punish = exists_path(arena, ltl::conj_all(parts))) {
        Verdict v;
        v.status = Status::Fails;
        v.lasso = *punish;
        v.note = "credible punishment defeats the deviation";
        return v;
    }
    Verdict v;
    v.status = Status::Holds;
    v.deviation = CoalitionStrategies{coalition, deviation};
    return v;
}

Verdict strong_core_membership(const Game& game, const StrategyProfile& profile,
                               int k) {
    Lasso run = run_of(game, profile);
    WinnerSet ws = winners(game, run);
    if (ws.losers.empty()) {
        Verdict v;
        v.status = Status::Holds;
        v.lasso = run;
        v.note = "every agent wins, so no loser coalition exists";
        return v;
    }
    std::vector<int> losers(ws.losers.begin(), ws.losers.end());
    for (const std::vector<int>& sub : subsets_by_size(losers, true)) {
        MachineEnumerator machines(game, sub, k);
        for (long long idx = 0; idx < machines.size(); ++idx) {
            std::vector<Strategy> joint = machines.at(idx);
            Verdict d = is_strong_beneficial_deviation(game, profile, sub, joint);
            if (d.holds()) {
                d.status = Status::Fails;
                d.note = "strong beneficial deviation found";
                return d;
            }
        }
    }
    Verdict v;
    v.bound = k;
    if (is_one_shot_sink_game(game.m)) {
        v.status = Status::Holds;
        v.lasso = run;
        v.note = "exhaustive at bound on a one-shot sink game";
    } else {
        v.status = Status::BoundLimited;
        v.note = "no strong deviation within the memory bound";
    }
    return v;
}

StrongCoreReport strong_core_empty_search(const Game& game, int k, int jobs) {
    StrongCoreReport report;
    report.exact = is_one_shot_sink_game(game.m) && k >= 1;

    std::vector<int> all;
    for (int i = 0; i < game.m.num_agents; ++i) all.push_back(i);
    MachineEnumerator machines(game, all, k);
    long long total = machines.size();
    report.rows.resize(total);

    auto work = [&](long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            StrongCoreRow& row = report.rows[idx];
            row.profile = machines.at(idx);
            for (int i = 0; i < game.m.num_agents; ++i)
                row.initial_actions.push_back(
                    row.profile[i].act[0][game.m.initial]);
            Lasso run = run_of(game, row.profile);
            row.winner_set = winners(game, run);
            row.verdict = strong_core_membership(game, row.profile, k);
        }
    };

    int n = std::max(1, jobs);
    if (n == 1 || total < 2 * n) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (total + n - 1) / n;
        for (int t = 0; t < n; ++t) {
            long long lo = t * chunk;
            long long hi = std::min(total, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (const StrongCoreRow& row : report.rows)
        if (row.verdict.holds()) report.empty_at_bound = false;
    return report;
}

std::vector<StrategyProfile> core_iterate(const Game& game, StrategyProfile start,
                                          int k, int max_steps) {
    std::vector<StrategyProfile> visited{start};
    StrategyProfile cur = std::move(start);
    for (int step = 0; step < max_steps; ++step) {
        Verdict v = core_membership(game, cur, k);
        if (!v.fails()) break;
        if (!v.deviation) throw GameError("core refutation carries no deviation");
        cur = merged_profile(cur, v.deviation->coalition, v.deviation->strategies);
        visited.push_back(cur);
    }
    return visited;
}

}  // namespace ccgs
