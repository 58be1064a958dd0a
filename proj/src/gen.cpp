#include "ccgs/gen.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace ccgs {

namespace {

// Assembly helper. Declare agents/actions/states, then init_tables(), then
// fill transitions; availability defaults to the full alphabet and sinks get
// a single available action so that the first decision round alone
// determines a memoryless run through them.
struct GameBuilder {
    Game g;

    GameBuilder(int agents, std::vector<std::vector<std::string>> actions) {
        g.m.num_agents = agents;
        g.m.action_names = std::move(actions);
    }

    StateId state(const std::string& name) {
        g.m.state_names.push_back(name);
        return static_cast<int>(g.m.state_names.size()) - 1;
    }

    void init_tables() {
        int n = g.m.num_states();
        long long rows = 1;
        for (int i = 0; i < g.m.num_agents; ++i) rows *= g.m.num_actions(i);
        g.m.available.assign(n, {});
        g.m.transition.assign(n, std::vector<StateId>(rows, -1));
        for (StateId s = 0; s < n; ++s)
            for (int i = 0; i < g.m.num_agents; ++i) {
                std::vector<ActionId> all;
                for (int a = 0; a < g.m.num_actions(i); ++a) all.push_back(a);
                g.m.available[s].push_back(std::move(all));
            }
    }

    void trans(StateId s, const Profile& p, StateId t) {
        g.m.transition[s][g.m.profile_key(p)] = t;
    }

    void trans_all(StateId s, StateId t) {
        for (const Profile& p : g.m.available_profiles(s)) trans(s, p, t);
    }

    void sink(StateId s) {
        for (int i = 0; i < g.m.num_agents; ++i) g.m.available[s][i] = {0};
        for (auto& cell : g.m.transition[s]) cell = -1;
        trans(s, Profile(g.m.num_agents, 0), s);
    }

    int prop(const std::string& name) {
        g.props.push_back(name);
        return static_cast<int>(g.props.size()) - 1;
    }

    Game done() {
        if (g.flavour == Flavour::Ltl && g.labels.empty())
            g.labels.assign(g.m.num_states(), {});
        validate_game(g);
        return std::move(g);
    }
};

Strategy constant(const Game& game, int agent, ActionId at_initial) {
    std::vector<ActionId> map;
    for (StateId s = 0; s < game.m.num_states(); ++s)
        map.push_back(s == game.m.initial ? at_initial
                                          : game.m.available[s][agent][0]);
    return Strategy::memoryless_from(map);
}

ExampleBundle coordination_example() {
    GameBuilder b(2, {{"pt", "pf"}, {"qt", "qf"}});
    StateId both = b.state("both");
    StateId ponly = b.state("ponly");
    StateId qonly = b.state("qonly");
    StateId neither = b.state("neither");
    b.init_tables();
    int p = b.prop("p");
    int q = b.prop("q");
    b.g.labels = {{p, q}, {p}, {q}, {}};
    for (StateId s : {both, ponly, qonly, neither}) {
        b.trans(s, {0, 0}, both);
        b.trans(s, {0, 1}, ponly);
        b.trans(s, {1, 0}, qonly);
        b.trans(s, {1, 1}, neither);
    }
    ltl::Formula goal =
        ltl::mk_always(ltl::mk_and(ltl::mk_atom("p"), ltl::mk_atom("q")));
    b.g.goals = {goal, goal};

    ExampleBundle out;
    out.game = b.done();
    out.profiles["all-true"] = {Strategy::memoryless_from({0, 0, 0, 0}),
                                Strategy::memoryless_from({0, 0, 0, 0})};
    out.profiles["all-false"] = {Strategy::memoryless_from({1, 1, 1, 1}),
                                 Strategy::memoryless_from({1, 1, 1, 1})};
    return out;
}

ExampleBundle heads_tails_example() {
    GameBuilder b(3, {{"h", "t"}, {"n"}, {"n"}});
    StateId start = b.state("start");
    StateId up = b.state("up");
    StateId down = b.state("down");
    b.init_tables();
    int p = b.prop("p");
    int q = b.prop("q");
    b.g.labels = {{}, {p}, {q}};
    b.trans(start, {0, 0, 0}, up);
    b.trans(start, {1, 0, 0}, down);
    b.sink(up);
    b.sink(down);
    b.g.goals = {ltl::mk_true(), ltl::mk_next(ltl::mk_always(ltl::mk_atom("p"))),
                 ltl::mk_next(ltl::mk_always(ltl::mk_atom("q")))};

    ExampleBundle out;
    out.game = b.done();
    Strategy idle = constant(out.game, 1, 0);
    out.profiles["heads"] = {constant(out.game, 0, 0), idle, idle};
    out.profiles["tails"] = {constant(out.game, 0, 1), idle, idle};
    return out;
}

ExampleBundle non_credible_example() {
    GameBuilder b(2, {{"a", "b"}, {"a", "b"}});
    StateId s0 = b.state("s0");
    StateId s1 = b.state("s1");
    StateId s2 = b.state("s2");
    StateId s3 = b.state("s3");
    b.init_tables();
    int p1 = b.prop("p1");
    int p2 = b.prop("p2");
    b.g.labels = {{}, {p1}, {p2}, {}};
    b.trans(s0, {0, 0}, s1);
    b.trans(s0, {0, 1}, s2);
    b.trans(s0, {1, 0}, s3);
    b.trans(s0, {1, 1}, s3);
    b.sink(s1);
    b.sink(s2);
    b.sink(s3);
    b.g.goals = {ltl::mk_eventually(ltl::mk_atom("p1")),
                 ltl::mk_eventually(ltl::mk_atom("p2"))};

    ExampleBundle out;
    out.game = b.done();
    out.profiles["aa"] = {constant(out.game, 0, 0), constant(out.game, 1, 0)};
    out.profiles["ab"] = {constant(out.game, 0, 0), constant(out.game, 1, 1)};
    out.profiles["bb"] = {constant(out.game, 0, 1), constant(out.game, 1, 1)};
    return out;
}

ExampleBundle empty_strong_core_example() {
    std::vector<std::vector<std::string>> acts(4,
                                               std::vector<std::string>{"0", "1"});
    GameBuilder b(4, acts);
    StateId s0 = b.state("s0");
    std::vector<StateId> sink(7, -1);
    for (int j = 1; j <= 6; ++j) sink[j] = b.state("s" + std::to_string(j));
    b.init_tables();
    for (int i = 0; i < 4; ++i) b.prop("w" + std::to_string(i + 1));
    // Winners per sink.
    std::vector<std::vector<int>> winners_at = {
        {}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    b.g.labels.assign(7, {});
    for (int j = 1; j <= 6; ++j)
        for (int i : winners_at[j]) b.g.labels[sink[j]].insert(i);

    // Outcome of each first-round action tuple a1a2a3a4.
    const int outcome[16] = {1, 1, 2, 2, 1, 3, 2, 5, 6, 4, 4, 4, 1, 3, 4, 3};
    for (int key = 0; key < 16; ++key) {
        Profile p = {(key >> 3) & 1, (key >> 2) & 1, (key >> 1) & 1, key & 1};
        b.trans(s0, p, sink[outcome[key]]);
    }
    for (int j = 1; j <= 6; ++j) b.sink(sink[j]);
    for (int i = 0; i < 4; ++i)
        b.g.goals.push_back(
            ltl::mk_eventually(ltl::mk_atom("w" + std::to_string(i + 1))));

    ExampleBundle out;
    out.game = b.done();
    out.profiles["all-zero"] = {
        constant(out.game, 0, 0), constant(out.game, 1, 0),
        constant(out.game, 2, 0), constant(out.game, 3, 0)};
    return out;
}

ExampleBundle mp_empty_core_example() {
    std::vector<std::vector<std::string>> acts(3,
                                               std::vector<std::string>{"h", "t"});
    GameBuilder b(3, acts);
    b.g.flavour = Flavour::MeanPayoff;
    StateId p = b.state("p");
    StateId r = b.state("r");
    StateId bb = b.state("b");
    StateId y = b.state("y");
    b.init_tables();
    // Row: outcome of (a1,a2,a3) at p with h=0, t=1.
    const StateId outcome[8] = {r, r, bb, p, p, y, bb, y};
    for (int key = 0; key < 8; ++key)
        b.trans(p, {(key >> 2) & 1, (key >> 1) & 1, key & 1}, outcome[key]);
    b.sink(r);
    b.sink(bb);
    b.sink(y);
    b.g.weights = {{-1, 2, 0, 1}, {-1, 1, 2, 0}, {-1, 0, 1, 2}};

    ExampleBundle out;
    out.game = b.done();
    auto fix = [&](ActionId a1, ActionId a2, ActionId a3) {
        return StrategyProfile{constant(out.game, 0, a1),
                               constant(out.game, 1, a2),
                               constant(out.game, 2, a3)};
    };
    out.profiles["all-heads"] = fix(0, 0, 0);  // reaches r
    out.profiles["all-tails"] = fix(1, 1, 1);  // reaches y
    out.profiles["stay"] = fix(0, 1, 1);       // loops on p
    return out;
}

}  // namespace

ExampleBundle build_example(const std::string& name) {
    if (name == "coordination") return coordination_example();
    if (name == "heads-tails") return heads_tails_example();
    if (name == "non-credible") return non_credible_example();
    if (name == "empty-strong-core-4p") return empty_strong_core_example();
    if (name == "mp-empty-core-3p") return mp_empty_core_example();
    throw GameError("unknown example: " + name);
}

std::vector<std::string> example_names() {
    return {"coordination", "heads-tails", "non-credible",
            "empty-strong-core-4p", "mp-empty-core-3p"};
}

Cnf parse_dimacs(const std::string& text) {
    Cnf cnf;
    std::istringstream in(text);
    std::string tok;
    bool seen_header = false;
    std::vector<int> clause;
    while (in >> tok) {
        if (tok == "c") {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        if (tok == "p") {
            std::string kind;
            int clauses = 0;
            if (!(in >> kind >> cnf.num_vars >> clauses) || kind != "cnf")
                throw GameError("malformed dimacs header");
            seen_header = true;
            continue;
        }
        int lit = 0;
        try {
            lit = std::stoi(tok);
        } catch (const std::exception&) {
            throw GameError("unexpected dimacs token: " + tok);
        }
        if (!seen_header) throw GameError("dimacs clause before header");
        if (lit == 0) {
            if (clause.empty()) throw GameError("empty dimacs clause");
            cnf.clauses.push_back(clause);
            clause.clear();
        } else {
            if (std::abs(lit) > cnf.num_vars)
                throw GameError("dimacs literal out of range: " + tok);
            clause.push_back(lit);
        }
    }
    if (!clause.empty()) throw GameError("dimacs clause missing terminating 0");
    if (!seen_header) throw GameError("missing dimacs header");
    return cnf;
}

std::pair<Game, StrategyProfile> cnf_to_mp_game(const Cnf& cnf) {
    int m = static_cast<int>(cnf.clauses.size());
    int n = cnf.num_vars;
    if (m < 1 || n < 1) throw GameError("formula needs a variable and a clause");
    if (m > 4) throw GameError("at most 4 clauses supported");

    std::vector<std::vector<std::string>> acts(m,
                                               std::vector<std::string>{"t", "f"});
    GameBuilder b(m, acts);
    b.g.flavour = Flavour::MeanPayoff;
    StateId ystart = b.state("ystart");
    StateId yloop = b.state("yloop");
    std::vector<StateId> pos(n + 1), neg(n + 1);
    for (int v = 1; v <= n; ++v) {
        pos[v] = b.state("x" + std::to_string(v));
        neg[v] = b.state("nx" + std::to_string(v));
    }
    StateId yend = b.state("yend");
    StateId ysink = b.state("ysink");
    b.init_tables();

    // All-t goes down the agreed branch; any refusal diverts.
    auto branch = [&](StateId s, StateId agreed, StateId refused) {
        for (const Profile& p : b.g.m.available_profiles(s)) {
            bool all_t = std::all_of(p.begin(), p.end(),
                                     [](ActionId a) { return a == 0; });
            b.trans(s, p, all_t ? agreed : refused);
        }
    };
    branch(ystart, yloop, ysink);
    branch(yloop, pos[1], neg[1]);
    for (int v = 1; v < n; ++v) {
        branch(pos[v], pos[v + 1], neg[v + 1]);
        branch(neg[v], pos[v + 1], neg[v + 1]);
    }
    b.trans_all(pos[n], yend);
    b.trans_all(neg[n], yend);
    b.trans_all(yend, yloop);
    b.sink(ysink);

    b.g.weights.assign(m, std::vector<long long>(b.g.m.num_states(), 0));
    for (int i = 0; i < m; ++i)
        for (int lit : cnf.clauses[i]) {
            if (lit > 0)
                b.g.weights[i][pos[lit]] = 1;
            else
                b.g.weights[i][neg[-lit]] = 1;
        }

    Game game = b.done();
    StrategyProfile reference;
    for (int i = 0; i < m; ++i) {
        std::vector<ActionId> map;
        for (StateId s = 0; s < game.m.num_states(); ++s)
            map.push_back(s == ysink ? 0 : 1);  // refuse everywhere
        reference.push_back(Strategy::memoryless_from(map));
    }
    return {std::move(game), std::move(reference)};
}

ThresholdReduction threshold_to_mp_game(const MultiMpGame& g) {
    int k = g.dim();
    if (k < 1) throw GameError("threshold game needs at least one dimension");

    // Per-node weight vectors: every out-edge of a node must agree, so the
    // edge weights can be read as state weights.
    std::vector<std::vector<std::vector<long long>>> out_w(g.num_nodes);
    std::vector<std::vector<int>> out_to(g.num_nodes);
    for (const auto& e : g.edges) {
        out_w[e.from].push_back(e.w);
        out_to[e.from].push_back(e.to);
    }
    for (int v = 0; v < g.num_nodes; ++v) {
        if (out_to[v].empty()) throw GameError("every node needs an outgoing edge");
        for (const auto& w : out_w[v])
            if (w != out_w[v][0])
                throw GameError("out-edges of a node must share one weight vector");
    }
    int deg1 = 1, deg2 = 1;
    for (int v = 0; v < g.num_nodes; ++v) {
        int d = static_cast<int>(out_to[v].size());
        if (g.player1[v]) deg1 = std::max(deg1, d);
        else deg2 = std::max(deg2, d);
    }

    std::vector<std::vector<std::string>> acts;
    for (int i = 0; i <= k; ++i) {
        int deg = i == 0 ? deg1 : (i == k ? deg2 : 1);
        std::vector<std::string> names;
        for (int d = 0; d < deg; ++d) names.push_back("m" + std::to_string(d + 1));
        acts.push_back(std::move(names));
    }
    GameBuilder b(k + 1, acts);
    b.g.flavour = Flavour::MeanPayoff;
    for (int v = 0; v < g.num_nodes; ++v) b.state("v" + std::to_string(v));
    b.g.m.initial = g.root;
    b.init_tables();
    for (int v = 0; v < g.num_nodes; ++v) {
        int mover = g.player1[v] ? 0 : k;
        int d = static_cast<int>(out_to[v].size());
        for (int i = 0; i <= k; ++i) {
            std::vector<ActionId> avail{0};
            if (i == mover) {
                avail.clear();
                for (ActionId a = 0; a < d; ++a) avail.push_back(a);
            }
            b.g.m.available[v][i] = avail;
        }
        for (const Profile& p : b.g.m.available_profiles(v))
            b.trans(v, p, out_to[v][p[mover]]);
    }
    b.g.weights.assign(k + 1, std::vector<long long>(g.num_nodes, 0));
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < g.num_nodes; ++v) b.g.weights[i][v] = out_w[v][0][i];

    ThresholdReduction out;
    out.game = b.done();
    for (int i = 0; i < k; ++i) out.coalition.push_back(i);
    out.z = g.threshold;
    return out;
}

namespace {

RandomGameParams clamp(RandomGameParams p) {
    p.agents = std::clamp(p.agents, 1, 4);
    p.states = std::clamp(p.states, 2, 6);
    p.actions = std::clamp(p.actions, 2, 3);
    p.max_weight = std::max(1, p.max_weight);
    return p;
}

Game random_sink_ltl(const RandomGameParams& p, std::mt19937_64& rng) {
    std::vector<std::vector<std::string>> acts;
    for (int i = 0; i < p.agents; ++i) {
        std::vector<std::string> names;
        for (int a = 0; a < p.actions; ++a)
            names.push_back(std::string(1, static_cast<char>('a' + a)));
        acts.push_back(std::move(names));
    }
    GameBuilder b(p.agents, acts);
    StateId s0 = b.state("s0");
    int sinks = p.states - 1;
    std::vector<StateId> sink(sinks);
    for (int j = 0; j < sinks; ++j) sink[j] = b.state("t" + std::to_string(j));
    b.init_tables();
    for (int i = 0; i < p.agents; ++i) b.prop("p" + std::to_string(i + 1));
    b.g.labels.assign(p.states, {});
    for (int j = 0; j < sinks; ++j)
        for (int i = 0; i < p.agents; ++i)
            if (rng() % 2) b.g.labels[sink[j]].insert(i);
    for (const Profile& pr : b.g.m.available_profiles(s0))
        b.trans(s0, pr, sink[rng() % sinks]);
    for (int j = 0; j < sinks; ++j) b.sink(sink[j]);
    for (int i = 0; i < p.agents; ++i)
        b.g.goals.push_back(ltl::mk_next(
            ltl::mk_always(ltl::mk_atom("p" + std::to_string(i + 1)))));
    return b.done();
}

Game random_flat(const RandomGameParams& p, std::mt19937_64& rng, bool mp) {
    std::vector<std::vector<std::string>> acts;
    for (int i = 0; i < p.agents; ++i) {
        std::vector<std::string> names;
        for (int a = 0; a < p.actions; ++a)
            names.push_back(std::string(1, static_cast<char>('a' + a)));
        acts.push_back(std::move(names));
    }
    GameBuilder b(p.agents, acts);
    if (mp) b.g.flavour = Flavour::MeanPayoff;
    for (int s = 0; s < p.states; ++s) b.state("s" + std::to_string(s));
    b.init_tables();
    for (StateId s = 0; s < p.states; ++s)
        for (const Profile& pr : b.g.m.available_profiles(s))
            b.trans(s, pr, static_cast<StateId>(rng() % p.states));
    if (mp) {
        b.g.weights.assign(p.agents, std::vector<long long>(p.states, 0));
        for (int i = 0; i < p.agents; ++i)
            for (StateId s = 0; s < p.states; ++s)
                b.g.weights[i][s] =
                    static_cast<long long>(rng() % (2 * p.max_weight + 1)) -
                    p.max_weight;
    } else {
        std::vector<std::string> atom_names;
        for (int i = 0; i < p.agents; ++i) {
            b.prop("p" + std::to_string(i + 1));
            atom_names.push_back("p" + std::to_string(i + 1));
        }
        b.g.labels.assign(p.states, {});
        for (StateId s = 0; s < p.states; ++s)
            for (int i = 0; i < p.agents; ++i)
                if (rng() % 2) b.g.labels[s].insert(i);
        for (int i = 0; i < p.agents; ++i)
            b.g.goals.push_back(random_formula(atom_names, 5, rng()));
    }
    return b.done();
}

}  // namespace

Game random_game(const std::string& family, const RandomGameParams& params,
                 std::uint64_t seed) {
    RandomGameParams p = clamp(params);
    std::mt19937_64 rng(seed);
    if (family == "sink-ltl") return random_sink_ltl(p, rng);
    if (family == "general-ltl") return random_flat(p, rng, false);
    if (family == "mp") return random_flat(p, rng, true);
    throw GameError("unknown random family: " + family);
}

ltl::Formula random_formula(const std::vector<std::string>& atoms, int size,
                            std::uint64_t seed) {
    if (atoms.empty()) throw GameError("random formula needs atoms");
    std::mt19937_64 rng(seed);
    std::function<ltl::Formula(int)> gen = [&](int budget) -> ltl::Formula {
        if (budget <= 1) return ltl::mk_atom(atoms[rng() % atoms.size()]);
        switch (rng() % 7) {
            case 0:
                return ltl::mk_not(gen(budget - 1));
            case 1:
                return ltl::mk_next(gen(budget - 1));
            case 2:
                return ltl::mk_eventually(gen(budget - 1));
            case 3:
                return ltl::mk_always(gen(budget - 1));
            case 4: {
                int left = 1 + static_cast<int>(rng() % (budget - 1));
                return ltl::mk_and(gen(left), gen(budget - left));
            }
            case 5: {
                int left = 1 + static_cast<int>(rng() % (budget - 1));
                return ltl::mk_or(gen(left), gen(budget - left));
            }
            default: {
                int left = 1 + static_cast<int>(rng() % (budget - 1));
                return ltl::mk_until(gen(left), gen(budget - left));
            }
        }
    };
    return gen(std::max(1, size));
}

MultiMpGame random_threshold_game(int nodes, int dim, int max_weight,
                                  std::uint64_t seed) {
    if (nodes < 1 || dim < 1 || max_weight < 1)
        throw GameError("invalid random threshold game parameters");
    std::mt19937_64 rng(seed);
    MultiMpGame g;
    g.num_nodes = nodes;
    g.root = 0;
    for (int v = 0; v < nodes; ++v) g.player1.push_back(rng() % 2 == 0);
    auto weight = [&]() {
        return static_cast<long long>(rng() % (2 * max_weight + 1)) - max_weight;
    };
    for (int v = 0; v < nodes; ++v) {
        // One weight vector per node, shared by its out-edges.
        std::vector<long long> w;
        for (int j = 0; j < dim; ++j) w.push_back(weight());
        int deg = 1 + static_cast<int>(rng() % 2);
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < deg)
            targets.insert(static_cast<int>(rng() % nodes));
        for (int t : targets) g.edges.push_back({v, t, w});
    }
    for (int j = 0; j < dim; ++j)
        g.threshold.push_back(Rational(BigInt(weight()), BigInt(2)));
    return g;
}

}  // namespace ccgs
