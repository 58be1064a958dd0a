#include "ccgs/mp.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

#include "ccgs/eval.hpp"

namespace ccgs {

Rational rat(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

std::string rat_to_string(const Rational& r) {
    std::string out = r.numerator().str();
    if (r.denominator() != 1) out += "/" + r.denominator().str();
    return out;
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
    std::vector<std::vector<int>> adj(num_nodes);
    for (std::size_t e = 0; e < edges.size(); ++e)
        adj[edges[e].from].push_back(static_cast<int>(e));
    return adj;
}

WeightedGraph weights_to_edges(const Game& game) {
    if (game.flavour != Flavour::MeanPayoff)
        throw GameError("edge graph only defined for mean-payoff games");
    const auto& m = game.m;
    WeightedGraph g;
    g.num_nodes = m.num_states();
    g.root = m.initial;
    for (StateId s = 0; s < m.num_states(); ++s) {
        std::set<StateId> targets;
        for (const Profile& p : m.available_profiles(s))
            targets.insert(m.raw_transition(s, p));
        for (StateId t : targets) {
            WeightedGraph::Edge e{s, t, {}};
            for (int i = 0; i < m.num_agents; ++i)
                e.w.push_back(game.weights[i][s]);
            g.edges.push_back(std::move(e));
        }
    }
    return g;
}

PayoffVector mp_of_lasso(const std::vector<std::vector<long long>>& weights,
                         const Lasso& lasso) {
    if (lasso.loop.empty()) throw GameError("lasso loop must be non-empty");
    PayoffVector out;
    for (const auto& w : weights) {
        BigInt sum = 0;
        for (StateId s : lasso.loop) sum += w[s];
        out.push_back(Rational(sum, BigInt(lasso.loop.size())));
    }
    return out;
}

PayoffVector mp_of_lasso(const Game& game, const Lasso& lasso) {
    if (game.flavour != Flavour::MeanPayoff)
        throw GameError("mean payoff only defined for mean-payoff games");
    return mp_of_lasso(game.weights, lasso);
}

namespace {

constexpr long long kInf = LLONG_MAX / 4;

std::vector<int> reachable_nodes(const WeightedGraph& g) {
    std::vector<char> seen(g.num_nodes, 0);
    std::vector<int> stack{g.root}, out;
    seen[g.root] = 1;
    auto adj = g.adjacency();
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int e : adj[v]) {
            int w = g.edges[e].to;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational karp_min_mean(const WeightedGraph& g, int coord) {
    std::vector<int> nodes = reachable_nodes(g);
    int n = static_cast<int>(nodes.size());
    std::vector<int> id(g.num_nodes, -1);
    for (int i = 0; i < n; ++i) id[nodes[i]] = i;

    // d[k][v]: minimum weight of a k-edge walk from the root.
    std::vector<std::vector<long long>> d(n + 1, std::vector<long long>(n, kInf));
    d[0][id[g.root]] = 0;
    for (int k = 1; k <= n; ++k)
        for (const auto& e : g.edges) {
            if (id[e.from] < 0 || id[e.to] < 0) continue;
            long long base = d[k - 1][id[e.from]];
            if (base == kInf) continue;
            d[k][id[e.to]] = std::min(d[k][id[e.to]], base + e.w[coord]);
        }

    bool found = false;
    Rational best;
    for (int v = 0; v < n; ++v) {
        if (d[n][v] == kInf) continue;
        bool have = false;
        Rational worst;
        for (int k = 0; k < n; ++k) {
            if (d[k][v] == kInf) continue;
            Rational mean(BigInt(d[n][v] - d[k][v]), BigInt(n - k));
            if (!have || mean > worst) {
                worst = mean;
                have = true;
            }
        }
        if (!have) continue;
        if (!found || worst < best) {
            best = worst;
            found = true;
        }
    }
    if (!found) throw GameError("no cycle reachable from the root");
    return best;
}

// Iterative Tarjan over an explicit successor list.
std::vector<int> scc_ids(int n, const std::vector<std::vector<int>>& succ) {
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> call{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < succ[f.v].size()) {
                int w = succ[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        if (w == f.v) break;
                    }
                    ++next_comp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

Rational min_mean_cycle(const WeightedGraph& g, int coord) {
    return karp_min_mean(g, coord);
}

Rational max_mean_cycle(const WeightedGraph& g, int coord) {
    WeightedGraph neg = g;
    for (auto& e : neg.edges) e.w[coord] = -e.w[coord];
    return -karp_min_mean(neg, coord);
}

std::vector<std::vector<int>> enumerate_simple_cycles(const WeightedGraph& g) {
    int n = g.num_nodes;
    std::vector<std::set<int>> adj(n);
    std::vector<std::vector<int>> cycles;
    for (const auto& e : g.edges) {
        if (e.from == e.to) continue;  // handled directly below
        adj[e.from].insert(e.to);
    }
    std::set<int> with_self_loop;
    for (const auto& e : g.edges)
        if (e.from == e.to) with_self_loop.insert(e.from);
    for (int v : with_self_loop) cycles.push_back({v});

    // Johnson's circuit enumeration: for each root s, cycles whose smallest
    // node is s, searched inside the SCC of s within nodes >= s.
    for (int s = 0; s < n; ++s) {
        std::vector<std::vector<int>> sub(n);
        for (int v = s; v < n; ++v)
            for (int w : adj[v])
                if (w >= s) sub[v].push_back(w);
        std::vector<int> comp = scc_ids(n, sub);
        std::vector<char> in_comp(n, 0);
        for (int v = s; v < n; ++v) in_comp[v] = comp[v] == comp[s];

        std::vector<char> blocked(n, 0);
        std::vector<std::set<int>> blist(n);
        std::vector<int> path;

        std::function<bool(int)> circuit = [&](int v) -> bool {
            bool found = false;
            path.push_back(v);
            blocked[v] = 1;
            for (int w : sub[v]) {
                if (!in_comp[w]) continue;
                if (w == s) {
                    cycles.push_back(path);
                    found = true;
                } else if (!blocked[w]) {
                    if (circuit(w)) found = true;
                }
            }
            if (found) {
                // Unblock v and everything waiting on it.
                std::vector<int> todo{v};
                while (!todo.empty()) {
                    int x = todo.back();
                    todo.pop_back();
                    if (!blocked[x]) continue;
                    blocked[x] = 0;
                    for (int y : blist[x]) todo.push_back(y);
                    blist[x].clear();
                }
            } else {
                for (int w : sub[v])
                    if (in_comp[w]) blist[w].insert(v);
            }
            path.pop_back();
            return found;
        };
        if (in_comp[s] && !sub[s].empty()) circuit(s);
    }
    return cycles;
}

namespace {

// Dense exact simplex, maximization over equalities with x >= 0.
// Bland's rule on both entering and leaving choices, so it terminates.
class Simplex {
public:
    // A: rows x cols, b: rows (made non-negative by row flips beforehand).
    Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    Rational maximize(const std::vector<Rational>& objective) {
        int rows = static_cast<int>(a_.size());
        int cols = static_cast<int>(a_[0].size());
        // Phase 1: artificial basis.
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < rows; ++j)
                a_[i].push_back(i == j ? Rational(1) : Rational(0));
        }
        basis_.clear();
        for (int i = 0; i < rows; ++i) basis_.push_back(cols + i);
        std::vector<Rational> phase1(cols + rows, Rational(0));
        for (int i = 0; i < rows; ++i) phase1[cols + i] = Rational(-1);
        run(phase1, cols + rows);
        if (objective_value(phase1) != Rational(0))
            throw GameError("linear program is infeasible");
        // Phase 2: artificial columns barred from entering.
        std::vector<Rational> full(cols + rows, Rational(0));
        for (int j = 0; j < cols; ++j) full[j] = objective[j];
        run(full, cols);
        return objective_value(full);
    }

private:
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<int> basis_;

    Rational objective_value(const std::vector<Rational>& c) const {
        Rational v(0);
        for (std::size_t i = 0; i < basis_.size(); ++i) v += c[basis_[i]] * b_[i];
        return v;
    }

    void run(const std::vector<Rational>& c, int enter_limit) {
        int rows = static_cast<int>(a_.size());
        while (true) {
            // Reduced costs under the current basis.
            int enter = -1;
            for (int j = 0; j < enter_limit && enter == -1; ++j) {
                bool basic = false;
                for (int bj : basis_)
                    if (bj == j) basic = true;
                if (basic) continue;
                Rational red = c[j];
                for (int i = 0; i < rows; ++i) red -= c[basis_[i]] * a_[i][j];
                if (red > Rational(0)) enter = j;
            }
            if (enter == -1) return;
            int leave = -1;
            Rational best_ratio(0);
            for (int i = 0; i < rows; ++i) {
                if (a_[i][enter] <= Rational(0)) continue;
                Rational ratio = b_[i] / a_[i][enter];
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == -1) throw GameError("linear program is unbounded");
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Rational p = a_[row][col];
        for (auto& x : a_[row]) x /= p;
        b_[row] /= p;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rational f = a_[i][col];
            if (f == Rational(0)) continue;
            for (std::size_t j = 0; j < a_[i].size(); ++j)
                a_[i][j] -= f * a_[row][j];
            b_[i] -= f * b_[row];
        }
        basis_[row] = col;
    }
};

}  // namespace

bool hull_feasible(const std::vector<PayoffVector>& vectors,
                   const PayoffVector& z, bool strict) {
    if (vectors.empty()) throw GameError("hull test needs at least one vector");
    std::size_t dim = z.size();
    // Fast path: a single vector already dominating.
    for (const PayoffVector& v : vectors) {
        bool dom = true;
        for (std::size_t j = 0; j < dim; ++j)
            if (strict ? !(v[j] > z[j]) : !(v[j] >= z[j])) dom = false;
        if (dom) return true;
    }
    if (vectors.size() == 1 || dim == 1) return false;
    // Necessary condition: the componentwise maximum dominates z.
    for (std::size_t j = 0; j < dim; ++j) {
        Rational mx = vectors[0][j];
        for (const PayoffVector& v : vectors) mx = std::max(mx, v[j]);
        if (strict ? !(mx > z[j]) : !(mx >= z[j])) return false;
    }

    // Maximise the minimum slack t: sum l_c * m_c - t >= z, sum l_c = 1.
    // Variables: l_1..l_m, t+ , t-, s_1..s_dim (slacks).
    int m = static_cast<int>(vectors.size());
    int cols = m + 2 + static_cast<int>(dim);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        for (int c = 0; c < m; ++c) row[c] = vectors[c][j];
        row[m] = Rational(-1);
        row[m + 1] = Rational(1);
        row[m + 2 + j] = Rational(-1);
        Rational rhs = z[j];
        if (rhs < Rational(0)) {
            for (auto& x : row) x = -x;
            rhs = -rhs;
        }
        a.push_back(std::move(row));
        b.push_back(rhs);
    }
    std::vector<Rational> sum_row(cols, Rational(0));
    for (int c = 0; c < m; ++c) sum_row[c] = Rational(1);
    a.push_back(std::move(sum_row));
    b.push_back(Rational(1));

    std::vector<Rational> objective(cols, Rational(0));
    objective[m] = Rational(1);
    objective[m + 1] = Rational(-1);
    Rational best = Simplex(std::move(a), std::move(b)).maximize(objective);
    return strict ? best > Rational(0) : best >= Rational(0);
}

namespace {

// Player 1 beats a fixed player-2 map iff some reachable SCC of the residual
// graph has a feasible cycle-mean hull.
bool wins_against_map(const MultiMpGame& g, const std::vector<int>& choice,
                      const std::vector<std::vector<int>>& p2_edges, bool strict) {
    WeightedGraph residual;
    residual.num_nodes = g.num_nodes;
    residual.root = g.root;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.player1[g.edges[e].from]) residual.edges.push_back(g.edges[e]);
    for (int v = 0; v < g.num_nodes; ++v)
        if (!g.player1[v] && !p2_edges[v].empty())
            residual.edges.push_back(g.edges[p2_edges[v][choice[v]]]);

    std::vector<int> nodes = reachable_nodes(residual);
    std::vector<char> reach(g.num_nodes, 0);
    for (int v : nodes) reach[v] = 1;
    std::vector<std::vector<int>> succ(g.num_nodes);
    WeightedGraph pruned;
    pruned.num_nodes = g.num_nodes;
    pruned.root = g.root;
    for (const auto& e : residual.edges)
        if (reach[e.from]) {
            succ[e.from].push_back(e.to);
            pruned.edges.push_back(e);
        }
    std::vector<int> comp = scc_ids(g.num_nodes, succ);

    std::map<std::pair<int, int>, std::vector<long long>> weight_of;
    for (const auto& e : pruned.edges) {
        auto key = std::make_pair(e.from, e.to);
        if (!weight_of.count(key)) weight_of[key] = e.w;
    }
    std::map<int, std::vector<PayoffVector>> hulls;
    for (const std::vector<int>& cyc : enumerate_simple_cycles(pruned)) {
        if (!reach[cyc[0]]) continue;
        PayoffVector mean(g.dim(), Rational(0));
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            const auto& w = weight_of.at({from, to});
            for (int j = 0; j < g.dim(); ++j) mean[j] += Rational(BigInt(w[j]));
        }
        for (int j = 0; j < g.dim(); ++j)
            mean[j] /= Rational(BigInt(cyc.size()));
        hulls[comp[cyc[0]]].push_back(std::move(mean));
    }
    for (const auto& [scc, vecs] : hulls)
        if (hull_feasible(vecs, g.threshold, strict)) return true;
    return false;
}

}  // namespace

bool solve_threshold(const MultiMpGame& g, bool strict) {
    for (int v = 0; v < g.num_nodes; ++v) {
        bool has_edge = false;
        for (const auto& e : g.edges)
            if (e.from == v) has_edge = true;
        if (!has_edge) throw GameError("every node needs an outgoing edge");
    }
    std::vector<std::vector<int>> p2_edges(g.num_nodes);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (!g.player1[g.edges[e].from])
            p2_edges[g.edges[e].from].push_back(static_cast<int>(e));

    std::vector<int> choice(g.num_nodes, 0);
    while (true) {
        if (!wins_against_map(g, choice, p2_edges, strict)) return false;
        int v = g.num_nodes - 1;
        while (v >= 0) {
            if (!g.player1[v] && !p2_edges[v].empty() &&
                ++choice[v] < static_cast<int>(p2_edges[v].size()))
                break;
            if (!g.player1[v]) choice[v] = 0;
            --v;
        }
        if (v < 0) return true;
    }
}

MultiMpGame lower_bound_game(const Game& game, const std::vector<int>& coalition,
                             const PayoffVector& z) {
    if (game.flavour != Flavour::MeanPayoff)
        throw GameError("lower bounds only defined for mean-payoff games");
    const auto& m = game.m;
    MultiMpGame g;
    g.threshold = z;
    g.root = m.initial;
    // Nodes: game states first, then (state, coalition action) pairs.
    std::map<std::pair<int, std::vector<ActionId>>, int> pair_id;
    std::vector<char> p1_flags(m.num_states(), 1);
    std::vector<WeightedGraph::Edge> edges;

    std::vector<int> free_agents;
    std::vector<char> in_coalition(m.num_agents, 0);
    for (int i : coalition) in_coalition[i] = 1;
    for (int i = 0; i < m.num_agents; ++i)
        if (!in_coalition[i]) free_agents.push_back(i);

    int next_id = m.num_states();
    for (StateId s = 0; s < m.num_states(); ++s) {
        std::vector<long long> w;
        for (int i : coalition) w.push_back(game.weights[i][s]);

        // Coalition action tuples at s, lexicographic.
        std::vector<std::vector<ActionId>> tuples{{}};
        for (int i : coalition) {
            std::vector<std::vector<ActionId>> next;
            for (const auto& t : tuples)
                for (ActionId a : m.available[s][i]) {
                    auto u = t;
                    u.push_back(a);
                    next.push_back(u);
                }
            tuples = std::move(next);
        }
        for (const auto& t : tuples) {
            int pid = next_id++;
            pair_id[{s, t}] = pid;
            p1_flags.push_back(0);
            edges.push_back({s, pid, w});

            // All completions by the free agents; dedup successors.
            std::set<StateId> targets;
            std::vector<std::size_t> idx(free_agents.size(), 0);
            while (true) {
                Profile p(m.num_agents);
                for (std::size_t ci = 0; ci < coalition.size(); ++ci)
                    p[coalition[ci]] = t[ci];
                for (std::size_t fi = 0; fi < free_agents.size(); ++fi)
                    p[free_agents[fi]] = m.available[s][free_agents[fi]][idx[fi]];
                targets.insert(m.raw_transition(s, p));
                int fi = static_cast<int>(free_agents.size()) - 1;
                while (fi >= 0 &&
                       ++idx[fi] == m.available[s][free_agents[fi]].size())
                    idx[fi--] = 0;
                if (fi < 0) break;
            }
            for (StateId target : targets) edges.push_back({pid, target, w});
        }
    }
    g.num_nodes = next_id;
    g.player1.assign(p1_flags.begin(), p1_flags.end());
    g.edges = std::move(edges);
    return g;
}

bool is_lower_bound(const Game& game, const std::vector<int>& coalition,
                    const PayoffVector& z, bool strict) {
    return solve_threshold(lower_bound_game(game, coalition, z), strict);
}

namespace {

WeightedGraph arena_graph(const Arena& arena, const Game& game,
                          const std::vector<int>& agents) {
    WeightedGraph g;
    g.num_nodes = arena.num_states();
    g.root = arena.initial;
    for (int v = 0; v < arena.num_states(); ++v) {
        std::vector<long long> w;
        for (int i : agents) w.push_back(game.weights[i][arena.project[v]]);
        for (int t : arena.succ[v]) g.edges.push_back({v, t, w});
    }
    return g;
}

}  // namespace

bool mp_is_beneficial_deviation(const Game& game, const StrategyProfile& profile,
                                const std::vector<int>& coalition,
                                const std::vector<Strategy>& deviation) {
    if (game.flavour != Flavour::MeanPayoff)
        throw GameError("mean-payoff deviation needs a mean-payoff game");
    if (coalition.empty()) throw GameError("deviating coalition must be non-empty");
    Lasso run = run_of(game, profile);
    PayoffVector pay = mp_of_lasso(game, run);
    Arena arena = restrict_game(game, coalition, deviation);
    WeightedGraph g = arena_graph(arena, game, coalition);
    for (std::size_t ci = 0; ci < coalition.size(); ++ci) {
        Rational worst = min_mean_cycle(g, static_cast<int>(ci));
        if (!(worst > pay[coalition[ci]])) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> nonempty_subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(i);
        out.push_back(std::move(sub));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

// Lazy search for a memoryless coalition deviation beating `pay` strictly in
// every coalition coordinate. Coalition action tuples are grouped per state
// by the successor set they induce, and states are assigned a class only
// once reached, so huge-but-shallow strategy spaces stay searchable.
class DeviationSearch {
public:
    DeviationSearch(const Game& game, std::vector<int> coalition, PayoffVector pay)
        : game_(&game), coalition_(std::move(coalition)), pay_(std::move(pay)) {
        const auto& m = game.m;
        std::vector<char> in_coalition(m.num_agents, 0);
        for (int i : coalition_) in_coalition[i] = 1;
        for (int i = 0; i < m.num_agents; ++i)
            if (!in_coalition[i]) free_.push_back(i);

        classes_.resize(m.num_states());
        for (StateId s = 0; s < m.num_states(); ++s) {
            std::map<std::set<StateId>, std::vector<ActionId>> by_succ;
            for (const auto& t : coalition_tuples(s)) {
                std::set<StateId> targets = successors(s, t);
                if (!by_succ.count(targets)) by_succ[targets] = t;
            }
            for (auto& [targets, tuple] : by_succ)
                classes_[s].push_back(
                    {std::vector<StateId>(targets.begin(), targets.end()), tuple});
        }
        assign_.assign(m.num_states(), -1);
    }

    std::optional<std::vector<Strategy>> search() {
        if (dfs()) {
            std::vector<std::vector<ActionId>> maps(
                coalition_.size(),
                std::vector<ActionId>(game_->m.num_states()));
            for (StateId s = 0; s < game_->m.num_states(); ++s) {
                const std::vector<ActionId>& tuple =
                    classes_[s][assign_[s] < 0 ? 0 : assign_[s]].tuple;
                for (std::size_t ci = 0; ci < coalition_.size(); ++ci)
                    maps[ci][s] = tuple[ci];
            }
            std::vector<Strategy> out;
            for (const auto& map : maps) out.push_back(Strategy::memoryless_from(map));
            return out;
        }
        return std::nullopt;
    }

private:
    struct Class {
        std::vector<StateId> targets;
        std::vector<ActionId> tuple;
    };

    const Game* game_;
    std::vector<int> coalition_;
    PayoffVector pay_;
    std::vector<int> free_;
    std::vector<std::vector<Class>> classes_;
    std::vector<int> assign_;

    std::vector<std::vector<ActionId>> coalition_tuples(StateId s) const {
        std::vector<std::vector<ActionId>> tuples{{}};
        for (int i : coalition_) {
            std::vector<std::vector<ActionId>> next;
            for (const auto& t : tuples)
                for (ActionId a : game_->m.available[s][i]) {
                    auto u = t;
                    u.push_back(a);
                    next.push_back(u);
                }
            tuples = std::move(next);
        }
        return tuples;
    }

    std::set<StateId> successors(StateId s, const std::vector<ActionId>& tuple) const {
        const auto& m = game_->m;
        std::set<StateId> targets;
        std::vector<std::size_t> idx(free_.size(), 0);
        while (true) {
            Profile p(m.num_agents);
            for (std::size_t ci = 0; ci < coalition_.size(); ++ci)
                p[coalition_[ci]] = tuple[ci];
            for (std::size_t fi = 0; fi < free_.size(); ++fi)
                p[free_[fi]] = m.available[s][free_[fi]][idx[fi]];
            targets.insert(m.raw_transition(s, p));
            int fi = static_cast<int>(free_.size()) - 1;
            while (fi >= 0 && ++idx[fi] == m.available[s][free_[fi]].size())
                idx[fi--] = 0;
            if (fi < 0) break;
        }
        return targets;
    }

    // First unassigned state reachable through assigned states, or -1; also
    // reports the assigned reachable set.
    int frontier(std::vector<StateId>& closed) const {
        std::vector<char> seen(game_->m.num_states(), 0);
        std::vector<StateId> queue{game_->m.initial};
        seen[game_->m.initial] = 1;
        closed.clear();
        for (std::size_t head = 0; head < queue.size(); ++head) {
            StateId s = queue[head];
            if (assign_[s] == -1) return s;
            closed.push_back(s);
            for (StateId t : classes_[s][assign_[s]].targets)
                if (!seen[t]) {
                    seen[t] = 1;
                    queue.push_back(t);
                }
        }
        return -1;
    }

    bool beneficial() const {
        std::vector<StateId> closed;
        frontier(closed);
        WeightedGraph g;
        g.num_nodes = game_->m.num_states();
        g.root = game_->m.initial;
        for (StateId s : closed) {
            std::vector<long long> w;
            for (int i : coalition_) w.push_back(game_->weights[i][s]);
            for (StateId t : classes_[s][assign_[s]].targets)
                g.edges.push_back({s, t, w});
        }
        for (std::size_t ci = 0; ci < coalition_.size(); ++ci)
            if (!(min_mean_cycle(g, static_cast<int>(ci)) > pay_[coalition_[ci]]))
                return false;
        return true;
    }

    bool dfs() {
        std::vector<StateId> closed;
        int open = frontier(closed);
        if (open == -1) return beneficial();
        for (std::size_t c = 0; c < classes_[open].size(); ++c) {
            assign_[open] = static_cast<int>(c);
            if (dfs()) return true;
        }
        assign_[open] = -1;
        return false;
    }
};

}  // namespace

std::optional<MpDeviation> mp_beneficial_deviation_exists(
    const Game& game, const StrategyProfile& profile) {
    Lasso run = run_of(game, profile);
    PayoffVector pay = mp_of_lasso(game, run);
    for (const std::vector<int>& c : nonempty_subsets_by_size(game.m.num_agents)) {
        DeviationSearch search(game, c, pay);
        if (auto dev = search.search()) return MpDeviation{c, std::move(*dev)};
    }
    return std::nullopt;
}

bool mp_core_membership(const Game& game, const StrategyProfile& profile) {
    return !mp_beneficial_deviation_exists(game, profile).has_value();
}

std::optional<MpECoreResult> mp_e_core(const Game& game) {
    std::vector<int> all;
    for (int i = 0; i < game.m.num_agents; ++i) all.push_back(i);
    MemorylessEnumerator profiles(game, all);
    for (long long idx = 0; idx < profiles.size(); ++idx) {
        StrategyProfile profile = profiles.at(idx);
        if (mp_core_membership(game, profile)) {
            Lasso run = run_of(game, profile);
            return MpECoreResult{std::move(profile), mp_of_lasso(game, run)};
        }
    }
    return std::nullopt;
}

bool lower_bound_characterisation(const Game& game, const Lasso& lasso) {
    if (!successor_consistent(game.m, lasso))
        throw GameError("lasso is not successor-consistent with the game");
    PayoffVector pay = mp_of_lasso(game, lasso);
    for (const std::vector<int>& c : nonempty_subsets_by_size(game.m.num_agents)) {
        PayoffVector z;
        for (int i : c) z.push_back(pay[i]);
        // A coalition able to guarantee strictly more for every member has a
        // lower bound dominating the run's payoffs.
        if (is_lower_bound(game, c, z, true)) return false;
    }
    return true;
}

}  // namespace ccgs
