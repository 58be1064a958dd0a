#include "ccgs/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ccgs {

const char* status_name(Status s) {
    switch (s) {
        case Status::Holds:
            return "HOLDS";
        case Status::Fails:
            return "FAILS";
        default:
            return "BOUND_LIMITED";
    }
}

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string text;  // comment-stripped
};

[[noreturn]] void fail(const Line& l, const std::string& msg) {
    throw ParseFileError(msg, l.number);
}

// Split into directive lines: '#' starts a comment, blank lines skipped.
// Punctuation that the grammar uses as separators gets padded so plain
// whitespace tokenisation works: ( ) , : ->
std::vector<Line> lex(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string padded;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            char c = raw[i];
            if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
                padded += " -> ";
                ++i;
            } else if (c == '(' || c == ')' || c == ',' || c == ':') {
                padded += ' ';
                padded += c;
                padded += ' ';
            } else {
                padded += c;
            }
        }
        Line l;
        l.number = number;
        l.text = raw;
        std::istringstream toks(padded);
        std::string t;
        while (toks >> t) l.tokens.push_back(t);
        if (!l.tokens.empty()) out.push_back(std::move(l));
    }
    return out;
}

int parse_int(const Line& l, const std::string& tok, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(l, "expected " + what + ", got '" + tok + "'");
    }
}

long long parse_ll(const Line& l, const std::string& tok) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(l, "expected an integer weight, got '" + tok + "'");
    }
}

class GameParser {
public:
    Game parse(const std::string& text) {
        for (const Line& l : lex(text)) handle(l);
        return finish();
    }

private:
    Game g;
    bool have_flavour = false, have_agents = false, have_states = false,
         have_init = false;
    std::map<std::string, StateId> state_id;
    std::vector<std::map<std::string, ActionId>> action_id;  // per agent
    // Availability: star-scope and per-state directives, resolved at the end.
    std::vector<std::vector<ActionId>> star_avail;
    std::vector<std::map<StateId, std::vector<ActionId>>> state_avail;
    std::set<std::string> prop_names;
    std::vector<std::pair<StateId, std::set<std::string>>> label_lines;
    struct TransLine {
        Line line;
        StateId from;
        std::vector<std::string> actions;
        StateId to;
    };
    std::vector<TransLine> trans_lines;
    std::vector<ltl::Formula> goal_of;
    std::vector<std::vector<std::optional<long long>>> weight_of;  // [agent][state]
    int last_line = 0;

    StateId state(const Line& l, const std::string& name) {
        auto it = state_id.find(name);
        if (it == state_id.end()) fail(l, "unknown state '" + name + "'");
        return it->second;
    }

    int agent(const Line& l, const std::string& tok) {
        int a = parse_int(l, tok, "an agent number");
        if (a < 1 || a > g.m.num_agents)
            fail(l, "agent number out of range: " + tok);
        return a - 1;
    }

    void need(const Line& l, bool ok, const std::string& what) {
        if (!ok) fail(l, what + " must come first");
    }

    void handle(const Line& l) {
        last_line = l.number;
        const auto& t = l.tokens;
        const std::string& d = t[0];
        if (d == "game") {
            if (t.size() != 2 || (t[1] != "ltl" && t[1] != "mp"))
                fail(l, "expected 'game ltl' or 'game mp'");
            g.flavour = t[1] == "ltl" ? Flavour::Ltl : Flavour::MeanPayoff;
            have_flavour = true;
        } else if (d == "agents") {
            need(l, have_flavour, "the game directive");
            if (t.size() != 2) fail(l, "expected 'agents <n>'");
            g.m.num_agents = parse_int(l, t[1], "an agent count");
            if (g.m.num_agents < 1) fail(l, "need at least one agent");
            g.m.action_names.resize(g.m.num_agents);
            action_id.resize(g.m.num_agents);
            star_avail.resize(g.m.num_agents);
            state_avail.resize(g.m.num_agents);
            goal_of.resize(g.m.num_agents);
        } else if (d == "states") {
            need(l, have_agents || have_flavour, "the game directive");
            if (t.size() < 2) fail(l, "expected at least one state name");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (state_id.count(t[i])) fail(l, "duplicate state '" + t[i] + "'");
                state_id[t[i]] = static_cast<StateId>(g.m.state_names.size());
                g.m.state_names.push_back(t[i]);
            }
            have_states = true;
        } else if (d == "init") {
            need(l, have_states, "the states directive");
            if (t.size() != 2) fail(l, "expected 'init <state>'");
            g.m.initial = state(l, t[1]);
            have_init = true;
        } else if (d == "actions") {
            need(l, g.m.num_agents > 0, "the agents directive");
            // actions <agent> @ <state>|* : a b ...
            if (t.size() < 6 || t[2] != "@" || t[4] != ":")
                fail(l, "expected 'actions <agent> @ <state>|* : a b ...'");
            int i = agent(l, t[1]);
            std::vector<ActionId> ids;
            for (std::size_t j = 5; j < t.size(); ++j) {
                auto [it, fresh] = action_id[i].emplace(
                    t[j], static_cast<ActionId>(g.m.action_names[i].size()));
                if (fresh) g.m.action_names[i].push_back(t[j]);
                ids.push_back(it->second);
            }
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            if (t[3] == "*") {
                star_avail[i] = ids;
            } else {
                need(l, have_states, "the states directive");
                state_avail[i][state(l, t[3])] = ids;
            }
        } else if (d == "label") {
            need(l, have_states, "the states directive");
            if (t.size() < 3 || t[2] != ":")
                fail(l, "expected 'label <state> : p q ...'");
            StateId s = state(l, t[1]);
            std::set<std::string> props;
            for (std::size_t j = 3; j < t.size(); ++j) {
                props.insert(t[j]);
                prop_names.insert(t[j]);
            }
            label_lines.push_back({s, std::move(props)});
        } else if (d == "weight") {
            need(l, have_states && g.m.num_agents > 0, "agents and states");
            if (t.size() != 5 || t[3] != ":")
                fail(l, "expected 'weight <agent> <state> : <int>'");
            int i = agent(l, t[1]);
            StateId s = state(l, t[2]);
            if (weight_of.empty())
                weight_of.assign(
                    g.m.num_agents,
                    std::vector<std::optional<long long>>(g.m.num_states()));
            weight_of[i][s] = parse_ll(l, t[4]);
        } else if (d == "trans") {
            need(l, have_states, "the states directive");
            // trans <state> ( a1 , ... , an ) -> <state>
            if (t.size() < 7 || t[2] != "(")
                fail(l, "expected 'trans <state> (a1,...,an) -> <state>'");
            TransLine tl{l, state(l, t[1]), {}, 0};
            std::size_t j = 3;
            bool expect_action = true;
            while (j < t.size() && t[j] != ")") {
                if (expect_action) {
                    tl.actions.push_back(t[j]);
                } else if (t[j] != ",") {
                    fail(l, "expected ',' in the action tuple");
                }
                expect_action = !expect_action;
                ++j;
            }
            if (j + 2 >= t.size() || t[j] != ")" || t[j + 1] != "->")
                fail(l, "expected '-> <state>' after the action tuple");
            tl.to = state(l, t[j + 2]);
            if (j + 3 != t.size()) fail(l, "trailing tokens after transition");
            if (static_cast<int>(tl.actions.size()) != g.m.num_agents)
                fail(l, "action tuple needs one action per agent");
            trans_lines.push_back(std::move(tl));
        } else if (d == "goal") {
            need(l, g.m.num_agents > 0, "the agents directive");
            if (t.size() < 4 || t[2] != ":")
                fail(l, "expected 'goal <agent> : <formula>'");
            int i = agent(l, t[1]);
            std::string text = l.text;
            auto colon = text.find(':');
            try {
                goal_of[i] = ltl::parse(text.substr(colon + 1));
            } catch (const ltl::ParseError& e) {
                fail(l, std::string("bad goal formula: ") + e.what());
            }
            for (const std::string& a : ltl::atoms_of(goal_of[i]))
                prop_names.insert(a);
        } else {
            fail(l, "unknown directive '" + d + "'");
        }
        have_agents = g.m.num_agents > 0;
    }

    Game finish() {
        auto top_fail = [&](const std::string& msg) -> void {
            throw ParseFileError(msg, last_line);
        };
        if (!have_flavour) top_fail("missing game directive");
        if (!have_agents) top_fail("missing agents directive");
        if (!have_states) top_fail("missing states directive");
        if (!have_init) top_fail("missing init directive");
        int n = g.m.num_states();

        // Availability: explicit per-state, else the agent's '*' scope, else
        // the agent's full alphabet.
        for (int i = 0; i < g.m.num_agents; ++i)
            if (g.m.action_names[i].empty())
                top_fail("agent " + std::to_string(i + 1) +
                         " has no actions directive");
        g.m.available.assign(n, {});
        for (StateId s = 0; s < n; ++s)
            for (int i = 0; i < g.m.num_agents; ++i) {
                auto it = state_avail[i].find(s);
                if (it != state_avail[i].end()) {
                    g.m.available[s].push_back(it->second);
                } else if (!star_avail[i].empty()) {
                    g.m.available[s].push_back(star_avail[i]);
                } else {
                    std::vector<ActionId> all;
                    for (ActionId a = 0; a < g.m.num_actions(i); ++a)
                        all.push_back(a);
                    g.m.available[s].push_back(std::move(all));
                }
            }

        long long rows = 1;
        for (int i = 0; i < g.m.num_agents; ++i) rows *= g.m.num_actions(i);
        g.m.transition.assign(n, std::vector<StateId>(rows, -1));
        for (const TransLine& tl : trans_lines) {
            Profile p(g.m.num_agents);
            for (int i = 0; i < g.m.num_agents; ++i) {
                auto it = action_id[i].find(tl.actions[i]);
                if (it == action_id[i].end())
                    fail(tl.line, "unknown action '" + tl.actions[i] +
                                      "' for agent " + std::to_string(i + 1));
                p[i] = it->second;
                const auto& av = g.m.available[tl.from][i];
                if (!std::binary_search(av.begin(), av.end(), p[i]))
                    fail(tl.line, "action '" + tl.actions[i] +
                                      "' is not available for agent " +
                                      std::to_string(i + 1) + " at state " +
                                      g.m.state_names[tl.from]);
            }
            StateId& cell = g.m.transition[tl.from][g.m.profile_key(p)];
            if (cell != -1 && cell != tl.to)
                fail(tl.line, "conflicting transition for this profile");
            cell = tl.to;
        }

        if (g.flavour == Flavour::Ltl) {
            // Propositions are every name seen in labels or goals, sorted,
            // so printing and reparsing keeps identifiers stable.
            std::vector<std::string> props(prop_names.begin(), prop_names.end());
            g.props = props;
            g.labels.assign(n, {});
            for (const auto& [s, names] : label_lines)
                for (const std::string& name : names)
                    g.labels[s].insert(g.prop_id(name));
            for (int i = 0; i < g.m.num_agents; ++i) {
                if (!goal_of[i])
                    top_fail("missing goal for agent " + std::to_string(i + 1));
                g.goals.push_back(goal_of[i]);
            }
        } else {
            if (!label_lines.empty()) top_fail("label lines in a mp game");
            for (int i = 0; i < g.m.num_agents; ++i)
                if (goal_of[i]) top_fail("goal lines in a mp game");
            g.weights.assign(g.m.num_agents, std::vector<long long>(n, 0));
            if (weight_of.empty())
                weight_of.assign(
                    g.m.num_agents,
                    std::vector<std::optional<long long>>(n));
            for (int i = 0; i < g.m.num_agents; ++i)
                for (StateId s = 0; s < n; ++s) {
                    if (!weight_of[i][s])
                        top_fail("missing weight for agent " +
                                 std::to_string(i + 1) + " at state " +
                                 g.m.state_names[s]);
                    g.weights[i][s] = *weight_of[i][s];
                }
        }
        try {
            validate_game(g);
        } catch (const GameError& e) {
            throw ParseFileError(e.what(), last_line);
        }
        return std::move(g);
    }
};

}  // namespace

Game parse_game(const std::string& text) { return GameParser().parse(text); }

std::string print_game(const Game& game) {
    const auto& m = game.m;
    std::ostringstream out;
    out << "game " << (game.flavour == Flavour::Ltl ? "ltl" : "mp") << "\n";
    out << "agents " << m.num_agents << "\n";
    out << "states";
    for (const auto& s : m.state_names) out << " " << s;
    out << "\n";
    out << "init " << m.state_names[m.initial] << "\n";
    for (int i = 0; i < m.num_agents; ++i) {
        bool uniform = true;
        for (StateId s = 1; s < m.num_states(); ++s)
            if (m.available[s][i] != m.available[0][i]) uniform = false;
        auto emit = [&](const std::string& scope,
                        const std::vector<ActionId>& ids) {
            out << "actions " << i + 1 << " @ " << scope << " :";
            for (ActionId a : ids) out << " " << m.action_names[i][a];
            out << "\n";
        };
        // Declare the full alphabet first so action ids survive a round trip
        // even when some action is unavailable everywhere.
        std::vector<ActionId> all;
        for (ActionId a = 0; a < m.num_actions(i); ++a) all.push_back(a);
        if (uniform && m.available[0][i] == all) {
            emit("*", all);
        } else {
            emit("*", all);
            for (StateId s = 0; s < m.num_states(); ++s)
                if (m.available[s][i] != all)
                    emit(m.state_names[s], m.available[s][i]);
        }
    }
    if (game.flavour == Flavour::Ltl) {
        for (StateId s = 0; s < m.num_states(); ++s) {
            if (game.labels[s].empty()) continue;
            out << "label " << m.state_names[s] << " :";
            for (int p : game.labels[s]) out << " " << game.props[p];
            out << "\n";
        }
    } else {
        for (int i = 0; i < m.num_agents; ++i)
            for (StateId s = 0; s < m.num_states(); ++s)
                out << "weight " << i + 1 << " " << m.state_names[s] << " : "
                    << game.weights[i][s] << "\n";
    }
    for (StateId s = 0; s < m.num_states(); ++s)
        for (const Profile& p : m.available_profiles(s)) {
            out << "trans " << m.state_names[s] << " (";
            for (int i = 0; i < m.num_agents; ++i)
                out << (i ? "," : "") << m.action_names[i][p[i]];
            out << ") -> " << m.state_names[m.raw_transition(s, p)] << "\n";
        }
    if (game.flavour == Flavour::Ltl)
        for (int i = 0; i < m.num_agents; ++i)
            out << "goal " << i + 1 << " : " << ltl::to_string(game.goals[i])
                << "\n";
    return out.str();
}

namespace {

ActionId action_of(const Line& l, const Game& game, int agent,
                   const std::string& name) {
    for (ActionId a = 0; a < game.m.num_actions(agent); ++a)
        if (game.m.action_names[agent][a] == name) return a;
    fail(l, "unknown action '" + name + "' for agent " + std::to_string(agent + 1));
}

}  // namespace

std::vector<std::pair<int, Strategy>> parse_strategies(const std::string& text,
                                                       const Game& game) {
    std::vector<Line> lines = lex(text);
    std::vector<std::pair<int, Strategy>> out;
    int n = game.m.num_states();

    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& head = lines[i];
        if (head.tokens[0] != "strategy" || head.tokens.size() != 2)
            fail(head, "expected 'strategy <agent>'");
        int agent = parse_int(head, head.tokens[1], "an agent number") - 1;
        if (agent < 0 || agent >= game.m.num_agents)
            fail(head, "agent number out of range");
        ++i;
        if (i >= lines.size()) fail(head, "strategy block needs a body");

        if (lines[i].tokens[0] == "memoryless") {
            ++i;
            std::vector<std::optional<ActionId>> map(n);
            while (i < lines.size() && lines[i].tokens[0] == "map") {
                const Line& l = lines[i];
                if (l.tokens.size() != 4 || l.tokens[2] != ":")
                    fail(l, "expected 'map <state> : <action>'");
                auto it = std::find(game.m.state_names.begin(),
                                    game.m.state_names.end(), l.tokens[1]);
                if (it == game.m.state_names.end())
                    fail(l, "unknown state '" + l.tokens[1] + "'");
                StateId s =
                    static_cast<StateId>(it - game.m.state_names.begin());
                map[s] = action_of(l, game, agent, l.tokens[3]);
                ++i;
            }
            std::vector<ActionId> full;
            for (StateId s = 0; s < n; ++s) {
                if (!map[s])
                    fail(head, "memoryless strategy misses state " +
                                   game.m.state_names[s]);
                full.push_back(*map[s]);
            }
            out.emplace_back(agent, Strategy::memoryless_from(full));
        } else if (lines[i].tokens[0] == "machine") {
            ++i;
            int k = -1, minit = -1;
            std::vector<std::optional<ActionId>> mout;
            std::vector<std::vector<std::optional<int>>> mnext;
            while (i < lines.size() && lines[i].tokens[0] != "strategy") {
                const Line& l = lines[i];
                const auto& t = l.tokens;
                if (t[0] == "mstates") {
                    if (t.size() != 2) fail(l, "expected 'mstates <k>'");
                    k = parse_int(l, t[1], "a machine size");
                    if (k < 1) fail(l, "machine needs at least one state");
                    mout.assign(k, std::nullopt);
                    mnext.assign(k, std::vector<std::optional<int>>(n));
                } else if (t[0] == "minit") {
                    if (t.size() != 2 || k < 0)
                        fail(l, "expected 'minit <q>' after mstates");
                    minit = parse_int(l, t[1], "a machine state");
                    if (minit < 0 || minit >= k)
                        fail(l, "minit out of range");
                } else if (t[0] == "out") {
                    if (t.size() != 4 || t[2] != ":" || k < 0)
                        fail(l, "expected 'out <q> : <action>' after mstates");
                    int q = parse_int(l, t[1], "a machine state");
                    if (q < 0 || q >= k) fail(l, "machine state out of range");
                    mout[q] = action_of(l, game, agent, t[3]);
                } else if (t[0] == "next") {
                    if (t.size() != 5 || t[3] != "->" || k < 0)
                        fail(l, "expected 'next <q> <state> -> <q2>' after mstates");
                    int q = parse_int(l, t[1], "a machine state");
                    auto it = std::find(game.m.state_names.begin(),
                                        game.m.state_names.end(), t[2]);
                    if (q < 0 || q >= k || it == game.m.state_names.end())
                        fail(l, "unknown machine state or game state");
                    int q2 = parse_int(l, t[4], "a machine state");
                    if (q2 < 0 || q2 >= k) fail(l, "target machine state out of range");
                    mnext[q][it - game.m.state_names.begin()] = q2;
                } else {
                    fail(l, "unknown strategy directive '" + t[0] + "'");
                }
                ++i;
            }
            if (k < 0) fail(head, "machine block misses mstates");
            if (minit < 0) fail(head, "machine block misses minit");
            for (int q = 0; q < k; ++q) {
                if (!mout[q])
                    fail(head, "missing out line for machine state " +
                                   std::to_string(q));
                for (StateId s = 0; s < n; ++s)
                    if (!mnext[q][s])
                        fail(head, "missing next line for machine state " +
                                       std::to_string(q) + " at " +
                                       game.m.state_names[s]);
            }
            // File machines move on the observed state first, then emit the
            // new state's output. Internally the played action is therefore
            // out[next[q][s]]; the initial machine state is renumbered to 0.
            auto perm = [&](int q) {
                if (q == minit) return 0;
                if (q == 0) return minit;
                return q;
            };
            Strategy st;
            st.num_states = k;
            st.act.assign(k, std::vector<ActionId>(n));
            st.nxt.assign(k, std::vector<int>(n));
            for (int q = 0; q < k; ++q)
                for (StateId s = 0; s < n; ++s) {
                    st.act[perm(q)][s] = *mout[*mnext[q][s]];
                    st.nxt[perm(q)][s] = perm(*mnext[q][s]);
                }
            out.emplace_back(agent, std::move(st));
        } else {
            fail(lines[i], "expected 'memoryless' or 'machine'");
        }
    }
    if (out.empty()) throw ParseFileError("no strategy blocks", 1);
    return out;
}

std::string print_strategies(const Game& game,
                             const std::vector<std::pair<int, Strategy>>& strats) {
    const auto& m = game.m;
    std::ostringstream out;
    for (const auto& [agent, st] : strats) {
        out << "strategy " << agent + 1 << "\n";
        if (st.memoryless()) {
            out << "memoryless\n";
            for (StateId s = 0; s < m.num_states(); ++s)
                out << "map " << m.state_names[s] << " : "
                    << m.action_names[agent][st.act[0][s]] << "\n";
            continue;
        }
        // Move-then-emit machine equivalent to the internal strategy: one
        // file state per (machine state, emitted action) pair, plus a fresh
        // initial state whose output is never used.
        struct MState {
            int q;
            ActionId a;
        };
        std::vector<MState> states{{0, st.act[0][0]}};  // index 0: initial
        std::map<std::pair<int, ActionId>, int> ids;
        std::vector<std::vector<int>> next;
        next.emplace_back();
        auto intern = [&](int q, ActionId a) {
            auto [it, fresh] = ids.emplace(std::make_pair(q, a),
                                           static_cast<int>(states.size()));
            if (fresh) {
                states.push_back({q, a});
                next.emplace_back();
            }
            return it->second;
        };
        for (std::size_t f = 0; f < states.size(); ++f) {
            next[f].resize(m.num_states());
            int q = states[f].q;
            for (StateId s = 0; s < m.num_states(); ++s)
                next[f][s] = intern(st.nxt[q][s], st.act[q][s]);
        }
        out << "machine\n";
        out << "mstates " << states.size() << "\n";
        out << "minit 0\n";
        for (std::size_t f = 0; f < states.size(); ++f)
            out << "out " << f << " : " << m.action_names[agent][states[f].a]
                << "\n";
        for (std::size_t f = 0; f < states.size(); ++f)
            for (StateId s = 0; s < m.num_states(); ++s)
                out << "next " << f << " " << m.state_names[s] << " -> "
                    << next[f][s] << "\n";
    }
    return out.str();
}

StrategyProfile parse_profile(const std::string& text, const Game& game) {
    auto pairs = parse_strategies(text, game);
    StrategyProfile profile(game.m.num_agents);
    std::vector<char> seen(game.m.num_agents, 0);
    for (auto& [agent, st] : pairs) {
        if (seen[agent])
            throw ParseFileError(
                "agent " + std::to_string(agent + 1) + " appears twice", 1);
        seen[agent] = 1;
        profile[agent] = std::move(st);
    }
    for (int i = 0; i < game.m.num_agents; ++i)
        if (!seen[i])
            throw ParseFileError(
                "profile misses agent " + std::to_string(i + 1), 1);
    return profile;
}

std::string verdict_to_json(const Game& game, const Verdict& v) {
    nlohmann::json j;
    j["status"] = status_name(v.status);
    j["bound"] = v.bound;
    if (v.lasso) {
        nlohmann::json lasso;
        lasso["stem"] = nlohmann::json::array();
        lasso["loop"] = nlohmann::json::array();
        for (StateId s : v.lasso->stem)
            lasso["stem"].push_back(game.m.state_names[s]);
        for (StateId s : v.lasso->loop)
            lasso["loop"].push_back(game.m.state_names[s]);
        j["witness"] = nlohmann::json{{"lasso", lasso}};
    } else if (v.deviation) {
        nlohmann::json w;
        w["coalition"] = nlohmann::json::array();
        for (int i : v.deviation->coalition) w["coalition"].push_back(i + 1);
        std::vector<std::pair<int, Strategy>> pairs;
        for (std::size_t ci = 0; ci < v.deviation->coalition.size(); ++ci)
            pairs.emplace_back(v.deviation->coalition[ci],
                               v.deviation->strategies[ci]);
        w["deviation"] = print_strategies(game, pairs);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GameError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GameError("cannot write file: " + path);
    out << text;
    out.flush();
    if (!out) throw GameError("write failed: " + path);
}

}  // namespace ccgs
