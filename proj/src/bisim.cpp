#include "ccgs/bisim.hpp"

#include <algorithm>
#include <map>

namespace ccgs {

namespace {

void check_compatible(const Game& a, const Game& b) {
    if (a.flavour != b.flavour)
        throw GameError("cannot compare games of different flavours");
    if (a.m.num_agents != b.m.num_agents)
        throw GameError("agent counts differ");
    if (a.m.action_names != b.m.action_names)
        throw GameError("action alphabets differ");
    if (a.flavour == Flavour::Ltl && a.props != b.props)
        throw GameError("proposition alphabets differ");
}

// Observable per-state data: labels (LTL) or the weight column (mean-payoff),
// plus the availability signature. States differing here are never related.
struct Observation {
    std::vector<std::vector<ActionId>> available;
    std::set<int> labels;
    std::vector<long long> weights;

    bool operator<(const Observation& o) const {
        if (available != o.available) return available < o.available;
        if (labels != o.labels) return labels < o.labels;
        return weights < o.weights;
    }
};

Observation observe(const Game& g, StateId s) {
    Observation obs;
    obs.available = g.m.available[s];
    if (g.flavour == Flavour::Ltl) {
        obs.labels = g.labels[s];
    } else {
        for (int i = 0; i < g.m.num_agents; ++i)
            obs.weights.push_back(g.weights[i][s]);
    }
    return obs;
}

}  // namespace

std::optional<BisimRelation> bisimilar(const Game& a, const Game& b) {
    check_compatible(a, b);
    int na = a.m.num_states();
    int nb = b.m.num_states();
    int n = na + nb;
    auto side = [&](int u) -> const Game& { return u < na ? a : b; };
    auto local = [&](int u) { return u < na ? u : u - na; };

    // Initial partition by observation.
    std::vector<int> block(n);
    {
        std::map<Observation, int> ids;
        for (int u = 0; u < n; ++u) {
            Observation obs = observe(side(u), local(u));
            auto [it, fresh] = ids.emplace(obs, static_cast<int>(ids.size()));
            (void)fresh;
            block[u] = it->second;
        }
    }

    // Refine on the successor block under each available profile. Within a
    // block the availability signatures agree, so the profile lists align.
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(n);
        for (int u = 0; u < n; ++u) {
            const Game& g = side(u);
            StateId s = local(u);
            std::vector<int> sig;
            for (const Profile& p : g.m.available_profiles(s)) {
                StateId t = g.m.raw_transition(s, p);
                sig.push_back(block[u < na ? t : na + t]);
            }
            auto key = std::make_pair(block[u], std::move(sig));
            auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
            (void)fresh;
            next[u] = it->second;
        }
        bool changed = next != block;
        block = std::move(next);
        if (!changed) break;
    }

    if (block[a.m.initial] != block[na + b.m.initial]) return std::nullopt;
    BisimRelation rel;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            if (block[x] == block[na + y]) rel.pairs.insert({x, y});
    return rel;
}

bool is_bisimulation(const Game& a, const Game& b, const BisimRelation& rel) {
    check_compatible(a, b);
    if (!rel.pairs.count({a.m.initial, b.m.initial})) return false;
    for (const auto& [x, y] : rel.pairs) {
        if (x < 0 || x >= a.m.num_states() || y < 0 || y >= b.m.num_states())
            return false;
        Observation ox = observe(a, x);
        Observation oy = observe(b, y);
        if (ox.available != oy.available || ox.labels != oy.labels ||
            ox.weights != oy.weights)
            return false;
        // Deterministic transitions with matching availability, so checking
        // every shared profile covers both the forth and back conditions.
        for (const Profile& p : a.m.available_profiles(x))
            if (!rel.pairs.count(
                    {a.m.raw_transition(x, p), b.m.raw_transition(y, p)}))
                return false;
    }
    return true;
}

}  // namespace ccgs
