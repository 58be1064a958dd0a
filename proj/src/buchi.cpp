#include "ccgs/buchi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

namespace ccgs {

namespace {

using ltl::Formula;

// Negation normal form over {true, false, literal, and, or, X, U, R},
// interned to small integers so tableau nodes are integer sets.
enum class NOp { True, False, Lit, And, Or, Next, Until, Release };

struct NForm {
    NOp op;
    std::string atom;  // Lit
    bool negated = false;
    int lhs = -1, rhs = -1;
};

class NnfPool {
public:
    int intern(NForm f) {
        auto key = std::make_tuple(static_cast<int>(f.op), f.atom, f.negated,
                                   f.lhs, f.rhs);
        auto it = ids_.find(key);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(forms_.size());
        forms_.push_back(std::move(f));
        ids_.emplace(std::move(key), id);
        return id;
    }
    const NForm& at(int id) const { return forms_[id]; }

    int from_ltl(const Formula& f, bool positive) {
        using ltl::Op;
        switch (f->op) {
            case Op::True:
                return intern({positive ? NOp::True : NOp::False, "", false, -1, -1});
            case Op::False:
                return intern({positive ? NOp::False : NOp::True, "", false, -1, -1});
            case Op::Atom:
                return intern({NOp::Lit, f->atom, !positive, -1, -1});
            case Op::Not:
                return from_ltl(f->lhs, !positive);
            case Op::And: {
                int a = from_ltl(f->lhs, positive);
                int b = from_ltl(f->rhs, positive);
                return intern({positive ? NOp::And : NOp::Or, "", false, a, b});
            }
            case Op::Or: {
                int a = from_ltl(f->lhs, positive);
                int b = from_ltl(f->rhs, positive);
                return intern({positive ? NOp::Or : NOp::And, "", false, a, b});
            }
            case Op::Next:
                return intern({NOp::Next, "", false, from_ltl(f->lhs, positive), -1});
            case Op::Until: {
                int a = from_ltl(f->lhs, positive);
                int b = from_ltl(f->rhs, positive);
                return intern({positive ? NOp::Until : NOp::Release, "", false, a, b});
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    std::vector<NForm> forms_;
    std::map<std::tuple<int, std::string, bool, int, int>, int> ids_;
};

// On-the-fly tableau node.
struct TNode {
    std::set<int> incoming;  // node ids; -1 stands for the initial marker
    std::set<int> news, old, next;
};

class Tableau {
public:
    explicit Tableau(NnfPool& pool) : pool_(&pool) {}

    // Completed nodes; each keeps its final incoming set.
    std::vector<TNode> build(int root) {
        TNode first;
        first.incoming.insert(-1);
        first.news.insert(root);
        expand(std::move(first));
        return std::move(done_);
    }

private:
    NnfPool* pool_;
    std::vector<TNode> done_;

    // Contradiction check for a literal against the accumulated old set.
    bool clashes(const NForm& lit, const std::set<int>& old) const {
        for (int g : old) {
            const NForm& h = pool_->at(g);
            if (h.op == NOp::Lit && h.atom == lit.atom && h.negated != lit.negated)
                return true;
        }
        return false;
    }

    void expand(TNode node) {
        if (node.news.empty()) {
            for (auto& nd : done_)
                if (nd.old == node.old && nd.next == node.next) {
                    nd.incoming.insert(node.incoming.begin(), node.incoming.end());
                    return;
                }
            int id = static_cast<int>(done_.size());
            done_.push_back(node);
            TNode succ;
            succ.incoming.insert(id);
            succ.news = node.next;
            expand(std::move(succ));
            return;
        }
        int f = *node.news.begin();
        node.news.erase(node.news.begin());
        if (node.old.count(f)) {
            expand(std::move(node));
            return;
        }
        const NForm& nf = pool_->at(f);
        switch (nf.op) {
            case NOp::False:
                return;  // inconsistent branch
            case NOp::True:
                expand(std::move(node));
                return;
            case NOp::Lit:
                if (clashes(nf, node.old)) return;
                node.old.insert(f);
                expand(std::move(node));
                return;
            case NOp::And:
                node.old.insert(f);
                if (!node.old.count(nf.lhs)) node.news.insert(nf.lhs);
                if (!node.old.count(nf.rhs)) node.news.insert(nf.rhs);
                expand(std::move(node));
                return;
            case NOp::Next:
                node.old.insert(f);
                node.next.insert(nf.lhs);
                expand(std::move(node));
                return;
            case NOp::Or: {
                TNode left = node, right = node;
                left.old.insert(f);
                right.old.insert(f);
                if (!left.old.count(nf.lhs)) left.news.insert(nf.lhs);
                if (!right.old.count(nf.rhs)) right.news.insert(nf.rhs);
                expand(std::move(left));
                expand(std::move(right));
                return;
            }
            case NOp::Until: {
                // a U b = b | (a & X(a U b))
                TNode now = node, later = node;
                later.old.insert(f);
                if (!later.old.count(nf.lhs)) later.news.insert(nf.lhs);
                later.next.insert(f);
                now.old.insert(f);
                if (!now.old.count(nf.rhs)) now.news.insert(nf.rhs);
                expand(std::move(later));
                expand(std::move(now));
                return;
            }
            case NOp::Release: {
                // a R b = b & (a | X(a R b))
                TNode both = node, later = node;
                later.old.insert(f);
                if (!later.old.count(nf.rhs)) later.news.insert(nf.rhs);
                later.next.insert(f);
                both.old.insert(f);
                if (!both.old.count(nf.lhs)) both.news.insert(nf.lhs);
                if (!both.old.count(nf.rhs)) both.news.insert(nf.rhs);
                expand(std::move(later));
                expand(std::move(both));
                return;
            }
        }
    }
};

bool edge_reads(const BuchiEdge& e, const std::set<std::string>& letter) {
    for (const auto& p : e.pos)
        if (!letter.count(p)) return false;
    for (const auto& n : e.neg)
        if (letter.count(n)) return false;
    return true;
}

}  // namespace

bool BuchiAutomaton::accepts(const std::vector<std::set<std::string>>& stem,
                             const std::vector<std::set<std::string>>& loop) const {
    if (loop.empty()) return false;
    std::size_t n = stem.size() + loop.size();
    auto letter = [&](std::size_t t) -> const std::set<std::string>& {
        return t < stem.size() ? stem[t] : loop[t - stem.size()];
    };
    auto succ_pos = [&](std::size_t t) { return t + 1 < n ? t + 1 : stem.size(); };

    // Product nodes (position, automaton state); acceptance = reachable
    // accepting node lying on a cycle.
    int total = static_cast<int>(n) * num_states;
    auto node_id = [&](std::size_t t, int q) {
        return static_cast<int>(t) * num_states + q;
    };
    std::vector<std::vector<int>> adj(total);
    for (std::size_t t = 0; t < n; ++t)
        for (const BuchiEdge& e : edges)
            if (edge_reads(e, letter(t)))
                adj[node_id(t, e.from)].push_back(node_id(succ_pos(t), e.to));

    std::vector<char> reach(total, 0);
    std::deque<int> queue;
    for (int q0 : initial) {
        int v = node_id(0, q0);
        if (!reach[v]) {
            reach[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!reach[w]) {
                reach[w] = 1;
                queue.push_back(w);
            }
    }
    for (std::size_t t = 0; t < n; ++t)
        for (int q : accepting) {
            int a = node_id(t, q);
            if (!reach[a]) continue;
            // Can a return to itself?
            std::vector<char> seen(total, 0);
            std::deque<int> bfs;
            for (int w : adj[a])
                if (!seen[w]) {
                    seen[w] = 1;
                    bfs.push_back(w);
                }
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop_front();
                if (v == a) return true;
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        bfs.push_back(w);
                    }
            }
        }
    return false;
}

BuchiAutomaton to_buchi(const ltl::Formula& f) {
    NnfPool pool;
    int root = pool.from_ltl(f, true);
    Tableau tab(pool);
    std::vector<TNode> nodes = tab.build(root);

    // Collect Until subformulas appearing anywhere in any node.
    std::set<int> untils;
    for (const TNode& nd : nodes)
        for (int g : nd.old)
            if (pool.at(g).op == NOp::Until) untils.insert(g);
    std::vector<int> until_list(untils.begin(), untils.end());
    int k = static_cast<int>(until_list.size());

    // GBA acceptance: for the j-th Until a U b, nodes with b in old or
    // without a U b in old.
    auto in_fset = [&](int node, int j) {
        const TNode& nd = nodes[node];
        int u = until_list[j];
        return nd.old.count(pool.at(u).rhs) > 0 || nd.old.count(u) == 0;
    };

    auto literals_of = [&](const TNode& nd) {
        std::pair<std::set<std::string>, std::set<std::string>> out;
        for (int g : nd.old) {
            const NForm& h = pool.at(g);
            if (h.op != NOp::Lit) continue;
            (h.negated ? out.second : out.first).insert(h.atom);
        }
        return out;
    };

    BuchiAutomaton nba;
    nba.alphabet = ltl::atoms_of(f);
    int layers = std::max(k, 1);
    int base = static_cast<int>(nodes.size());
    // State (node, layer) = layer * base + node; plus one entry state at the
    // end (tableau nodes are entered by reading the letter they constrain).
    nba.num_states = layers * base + 1;
    int entry = layers * base;
    nba.initial = {entry};

    // Round-robin degeneralisation: the layer advances when the SOURCE node
    // lies in the layer's acceptance set; accepting = layer-0 states whose
    // node is in the 0th set. Entry edges land in layer 0.
    auto add_edge = [&](int from, int to_node, int to_layer) {
        auto [pos, neg] = literals_of(nodes[to_node]);
        nba.edges.push_back({from, to_layer * base + to_node, pos, neg});
    };

    for (int t = 0; t < base; ++t)
        for (int src : nodes[t].incoming) {
            if (src == -1) {
                add_edge(entry, t, 0);
            } else {
                for (int layer = 0; layer < layers; ++layer) {
                    int to_layer = layer;
                    if (k > 0 && in_fset(src, layer)) to_layer = (layer + 1) % k;
                    add_edge(layer * base + src, t, to_layer);
                }
            }
        }

    if (k == 0) {
        for (int q = 0; q < nba.num_states; ++q) nba.accepting.insert(q);
    } else {
        for (int t = 0; t < base; ++t)
            if (in_fset(t, 0)) nba.accepting.insert(t);  // layer 0
    }
    return nba;
}

std::optional<Lasso> exists_path(const Arena& arena, const ltl::Formula& f) {
    BuchiAutomaton nba = to_buchi(f);

    int nq = nba.num_states;
    auto node_id = [&](int v, int q) { return v * nq + q; };
    int total = arena.num_states() * nq;

    std::vector<std::vector<BuchiEdge>> by_from(nq);
    for (const BuchiEdge& e : nba.edges) by_from[e.from].push_back(e);

    std::vector<std::set<std::string>> letter(arena.num_states());
    for (int v = 0; v < arena.num_states(); ++v) letter[v] = arena.label_names(v);

    std::vector<std::vector<int>> adj(total);
    for (int v = 0; v < arena.num_states(); ++v)
        for (int q = 0; q < nq; ++q)
            for (const BuchiEdge& e : by_from[q])
                if (edge_reads(e, letter[v]))
                    for (int w : arena.succ[v])
                        adj[node_id(v, q)].push_back(node_id(w, e.to));

    // BFS from the initial product nodes, keeping parents for stems.
    std::vector<int> parent(total, -2);
    std::deque<int> queue;
    std::vector<int> order;
    for (int q0 : nba.initial) {
        int s = node_id(arena.initial, q0);
        if (parent[s] == -2) {
            parent[s] = -1;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                queue.push_back(w);
            }
    }

    auto is_accepting = [&](int node) { return nba.accepting.count(node % nq) > 0; };

    for (int a : order) {
        if (!is_accepting(a)) continue;
        // Shortest cycle through a, if any.
        std::vector<int> par(total, -2);
        std::deque<int> bfs;
        for (int w : adj[a])
            if (par[w] == -2) {
                par[w] = a;
                bfs.push_back(w);
            }
        bool found = par[a] != -2;
        while (!bfs.empty() && !found) {
            int v = bfs.front();
            bfs.pop_front();
            for (int w : adj[v]) {
                if (par[w] == -2) {
                    par[w] = v;
                    bfs.push_back(w);
                }
                if (w == a) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) continue;

        // Reconstruct loop a -> ... -> a and stem init -> ... -> a.
        std::vector<int> loop;
        int v = par[a];
        while (v != a) {
            loop.push_back(v);
            v = par[v];
        }
        loop.push_back(a);
        std::reverse(loop.begin(), loop.end());

        std::vector<int> stem;
        v = parent[a];
        while (v != -1) {
            stem.push_back(v);
            v = parent[v];
        }
        std::reverse(stem.begin(), stem.end());

        Lasso l;
        for (int n : stem) l.stem.push_back(arena.project[n / nq]);
        for (int n : loop) l.loop.push_back(arena.project[n / nq]);
        return l;
    }
    return std::nullopt;
}

}  // namespace ccgs
