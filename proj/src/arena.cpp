#include "ccgs/arena.hpp"

#include <algorithm>
#include <map>

namespace ccgs {

Lasso Arena::project_lasso(const std::vector<int>& stem,
                           const std::vector<int>& loop) const {
    Lasso l;
    for (int v : stem) l.stem.push_back(project[v]);
    for (int v : loop) l.loop.push_back(project[v]);
    return l;
}

Arena restrict_game(const Game& game, const std::vector<int>& coalition,
                    const std::vector<Strategy>& machines) {
    if (coalition.size() != machines.size())
        throw GameError("one machine per coalition member required");
    const auto& m = game.m;
    std::vector<char> in_coalition(m.num_agents, 0);
    for (int i : coalition) in_coalition[i] = 1;
    std::vector<int> free_agents;
    for (int i = 0; i < m.num_agents; ++i)
        if (!in_coalition[i]) free_agents.push_back(i);

    struct Node {
        StateId s;
        std::vector<int> q;
        bool operator<(const Node& o) const {
            if (s != o.s) return s < o.s;
            return q < o.q;
        }
    };

    Arena arena;
    arena.game = &game;
    std::map<Node, int> ids;
    std::vector<Node> nodes;
    auto intern = [&](const Node& n) {
        auto it = ids.find(n);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        ids.emplace(n, id);
        nodes.push_back(n);
        arena.succ.emplace_back();
        arena.project.push_back(n.s);
        return id;
    };

    Node init{m.initial, std::vector<int>(coalition.size(), 0)};
    arena.initial = intern(init);

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        Node cur = nodes[head];
        Profile p(m.num_agents);
        for (std::size_t ci = 0; ci < coalition.size(); ++ci) {
            int i = coalition[ci];
            ActionId a = machines[ci].act[cur.q[ci]][cur.s];
            const auto& av = m.available[cur.s][i];
            if (!std::binary_search(av.begin(), av.end(), a))
                throw GameError("fixed machine for agent " + std::to_string(i + 1) +
                                " plays unavailable action at reachable state " +
                                m.state_names[cur.s]);
            p[i] = a;
        }
        Node next;
        next.q.resize(coalition.size());
        for (std::size_t ci = 0; ci < coalition.size(); ++ci)
            next.q[ci] = machines[ci].nxt[cur.q[ci]][cur.s];

        // All completions by the free agents. Successors are collected
        // locally first: intern() may grow arena.succ while we loop.
        std::vector<int> succs;
        std::vector<std::size_t> idx(free_agents.size(), 0);
        while (true) {
            for (std::size_t fi = 0; fi < free_agents.size(); ++fi) {
                int i = free_agents[fi];
                p[i] = m.available[cur.s][i][idx[fi]];
            }
            next.s = m.raw_transition(cur.s, p);
            succs.push_back(intern(next));
            int fi = static_cast<int>(free_agents.size()) - 1;
            while (fi >= 0 &&
                   ++idx[fi] == m.available[cur.s][free_agents[fi]].size())
                idx[fi--] = 0;
            if (fi < 0) break;
        }
        std::sort(succs.begin(), succs.end());
        succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
        arena.succ[head] = std::move(succs);
    }
    return arena;
}

Arena arena_of(const Game& game) { return restrict_game(game, {}, {}); }

}  // namespace ccgs
