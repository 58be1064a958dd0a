#include "ccgs/strategy.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ccgs/eval.hpp"

namespace ccgs {

Strategy Strategy::memoryless_from(const std::vector<ActionId>& map) {
    Strategy s;
    s.num_states = 1;
    s.act = {map};
    s.nxt = {std::vector<int>(map.size(), 0)};
    return s;
}

Lasso run_of(const Game& game, const StrategyProfile& profile) {
    const auto& m = game.m;
    if (static_cast<int>(profile.size()) != m.num_agents)
        throw GameError("profile does not cover the agent set");

    struct Config {
        StateId s;
        std::vector<int> q;
        bool operator<(const Config& o) const {
            if (s != o.s) return s < o.s;
            return q < o.q;
        }
    };

    Config cur{m.initial, std::vector<int>(m.num_agents, 0)};
    std::map<Config, std::size_t> seen;
    std::vector<StateId> states;
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            Lasso l;
            l.stem.assign(states.begin(), states.begin() + it->second);
            l.loop.assign(states.begin() + it->second, states.end());
            return l;
        }
        seen.emplace(cur, states.size());
        states.push_back(cur.s);
        Profile p(m.num_agents);
        for (int i = 0; i < m.num_agents; ++i) p[i] = profile[i].act[cur.q[i]][cur.s];
        StateId next = successor(m, cur.s, p);
        for (int i = 0; i < m.num_agents; ++i) cur.q[i] = profile[i].nxt[cur.q[i]][cur.s];
        cur.s = next;
    }
}

WinnerSet winners(const Game& game, const Lasso& lasso) {
    if (game.flavour != Flavour::Ltl)
        throw GameError("winners only defined for ltl games");
    WinnerSet out;
    for (int i = 0; i < game.m.num_agents; ++i) {
        if (eval_on_lasso(game.goals[i], lasso, game))
            out.winners.insert(i);
        else
            out.losers.insert(i);
    }
    return out;
}

MemorylessEnumerator::MemorylessEnumerator(const Game& game, std::vector<int> coalition)
    : game_(&game), coalition_(std::move(coalition)) {
    total_ = 1;
    for (int i : coalition_)
        for (StateId s = 0; s < game.m.num_states(); ++s)
            total_ *= static_cast<long long>(game.m.available[s][i].size());
}

std::vector<Strategy> MemorylessEnumerator::at(long long index) const {
    const auto& m = game_->m;
    // Decode in reverse significance: last (member, state) pair varies fastest.
    std::vector<Strategy> out(coalition_.size());
    std::vector<std::vector<ActionId>> maps(coalition_.size(),
                                            std::vector<ActionId>(m.num_states()));
    for (std::size_t ci = coalition_.size(); ci-- > 0;) {
        int i = coalition_[ci];
        for (StateId s = m.num_states(); s-- > 0;) {
            long long radix = static_cast<long long>(m.available[s][i].size());
            maps[ci][s] = m.available[s][i][index % radix];
            index /= radix;
        }
    }
    for (std::size_t ci = 0; ci < coalition_.size(); ++ci)
        out[ci] = Strategy::memoryless_from(maps[ci]);
    return out;
}

namespace {

// Output-behaviour minimality: no two machine states are equivalent under
// the usual Moore/Mealy partition refinement.
bool is_minimal(const Strategy& st, int num_game_states) {
    int k = st.num_states;
    std::vector<int> block(k, 0);
    // Initial split by the full output row.
    std::map<std::vector<ActionId>, int> by_row;
    for (int q = 0; q < k; ++q) {
        auto ins = by_row.emplace(st.act[q], static_cast<int>(by_row.size()));
        block[q] = ins.first->second;
    }
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> sig;
        std::vector<int> nb(k);
        for (int q = 0; q < k; ++q) {
            std::vector<int> row(num_game_states);
            for (int s = 0; s < num_game_states; ++s) row[s] = block[st.nxt[q][s]];
            auto ins = sig.emplace(std::make_pair(block[q], std::move(row)),
                                   static_cast<int>(sig.size()));
            nb[q] = ins.first->second;
        }
        if (nb == block) break;
        block = nb;
    }
    return *std::max_element(block.begin(), block.end()) == k - 1;
}

// Canonical = states already numbered in BFS order from 0, exploring game
// states in increasing order. Also certifies full reachability.
bool is_bfs_canonical(const Strategy& st, int num_game_states) {
    int k = st.num_states;
    std::vector<int> order;
    std::vector<char> seen(k, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int q = order[head];
        for (int s = 0; s < num_game_states; ++s) {
            int q2 = st.nxt[q][s];
            if (!seen[q2]) {
                seen[q2] = 1;
                order.push_back(q2);
            }
        }
    }
    if (static_cast<int>(order.size()) != k) return false;
    for (int i = 0; i < k; ++i)
        if (order[i] != i) return false;
    return true;
}

}  // namespace

std::vector<Strategy> canonical_machines(const Game& game, int agent, int k) {
    const auto& m = game.m;
    int ns = m.num_states();
    std::vector<Strategy> out;
    for (int size = 1; size <= k; ++size) {
        double raw = 1;
        for (int q = 0; q < size; ++q)
            for (StateId s = 0; s < ns; ++s)
                raw *= static_cast<double>(m.available[s][agent].size()) * size;
        if (raw > 5e6)
            throw GameError("machine enumeration space too large at bound " +
                            std::to_string(k));
        // Mixed-radix walk over all (act, nxt) tables with `size` states.
        std::vector<int> digit(2 * size * ns, 0);
        std::vector<int> radix(2 * size * ns);
        for (int q = 0; q < size; ++q)
            for (StateId s = 0; s < ns; ++s) {
                radix[2 * (q * ns + s)] = static_cast<int>(m.available[s][agent].size());
                radix[2 * (q * ns + s) + 1] = size;
            }
        while (true) {
            Strategy st;
            st.num_states = size;
            st.act.assign(size, std::vector<ActionId>(ns));
            st.nxt.assign(size, std::vector<int>(ns));
            for (int q = 0; q < size; ++q)
                for (StateId s = 0; s < ns; ++s) {
                    st.act[q][s] = m.available[s][agent][digit[2 * (q * ns + s)]];
                    st.nxt[q][s] = digit[2 * (q * ns + s) + 1];
                }
            if (is_bfs_canonical(st, ns) && is_minimal(st, ns)) out.push_back(st);
            int i = static_cast<int>(digit.size()) - 1;
            while (i >= 0 && ++digit[i] == radix[i]) digit[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

MachineEnumerator::MachineEnumerator(const Game& game, std::vector<int> coalition, int k)
    : game_(&game), coalition_(std::move(coalition)) {
    for (int i : coalition_) per_member_.push_back(canonical_machines(game, i, k));
}

long long MachineEnumerator::size() const {
    long long total = 1;
    for (const auto& list : per_member_) total *= static_cast<long long>(list.size());
    return total;
}

std::vector<Strategy> MachineEnumerator::at(long long index) const {
    std::vector<Strategy> out(per_member_.size());
    for (std::size_t ci = per_member_.size(); ci-- > 0;) {
        long long radix = static_cast<long long>(per_member_[ci].size());
        out[ci] = per_member_[ci][index % radix];
        index /= radix;
    }
    return out;
}

}  // namespace ccgs
