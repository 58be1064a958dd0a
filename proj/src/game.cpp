#include "ccgs/game.hpp"

#include <algorithm>
#include <deque>

namespace ccgs {

long long ConcurrentGameStructure::profile_key(const Profile& p) const {
    long long key = 0;
    for (int i = 0; i < num_agents; ++i) key = key * num_actions(i) + p[i];
    return key;
}

std::vector<Profile> ConcurrentGameStructure::available_profiles(StateId s) const {
    std::vector<Profile> out;
    Profile cur(num_agents);
    std::vector<std::size_t> idx(num_agents, 0);
    while (true) {
        for (int i = 0; i < num_agents; ++i) cur[i] = available[s][i][idx[i]];
        out.push_back(cur);
        int i = num_agents - 1;
        while (i >= 0 && ++idx[i] == available[s][i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

StateId ConcurrentGameStructure::raw_transition(StateId s, const Profile& p) const {
    return transition[s][profile_key(p)];
}

bool ConcurrentGameStructure::is_absorbing(StateId s) const {
    for (const Profile& p : available_profiles(s))
        if (raw_transition(s, p) != s) return false;
    return true;
}

std::vector<StateId> ConcurrentGameStructure::reachable_states() const {
    std::vector<char> seen(num_states(), 0);
    std::deque<StateId> queue{initial};
    seen[initial] = 1;
    std::vector<StateId> out;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        out.push_back(s);
        for (const Profile& p : available_profiles(s)) {
            StateId t = raw_transition(s, p);
            if (t >= 0 && !seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> Game::label_names(StateId s) const {
    std::set<std::string> out;
    if (s < static_cast<StateId>(labels.size()))
        for (int p : labels[s]) out.insert(props[p]);
    return out;
}

int Game::prop_id(const std::string& name) const {
    for (std::size_t i = 0; i < props.size(); ++i)
        if (props[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::string profile_text(const ConcurrentGameStructure& m, const Profile& p) {
    std::string out = "(";
    for (int i = 0; i < m.num_agents; ++i) {
        if (i) out += ",";
        out += m.action_names[i][p[i]];
    }
    return out + ")";
}

}  // namespace

StateId successor(const ConcurrentGameStructure& m, StateId s, const Profile& p) {
    if (static_cast<int>(p.size()) != m.num_agents)
        throw GameError("profile arity mismatch at state " + m.state_names[s]);
    for (int i = 0; i < m.num_agents; ++i) {
        const auto& av = m.available[s][i];
        if (!std::binary_search(av.begin(), av.end(), p[i])) {
            std::string name =
                p[i] >= 0 && p[i] < static_cast<int>(m.action_names[i].size())
                    ? m.action_names[i][p[i]]
                    : "#" + std::to_string(p[i]);
            throw GameError("action " + name + " unavailable for agent " +
                            std::to_string(i + 1) + " at state " +
                            m.state_names[s]);
        }
    }
    StateId t = m.raw_transition(s, p);
    if (t < 0)
        throw GameError("transition undefined at state " + m.state_names[s] +
                        " for profile " + profile_text(m, p));
    return t;
}

void validate_game(const Game& game) {
    const auto& m = game.m;
    if (m.num_agents < 1) throw GameError("game needs at least one agent");
    if (m.state_names.empty()) throw GameError("game needs at least one state");
    if (m.initial < 0 || m.initial >= m.num_states())
        throw GameError("initial state out of range");
    if (static_cast<int>(m.action_names.size()) != m.num_agents)
        throw GameError("action alphabet count differs from agent count");
    for (int i = 0; i < m.num_agents; ++i)
        if (m.action_names[i].empty())
            throw GameError("agent " + std::to_string(i + 1) + " has no actions");
    if (static_cast<int>(m.available.size()) != m.num_states() ||
        static_cast<int>(m.transition.size()) != m.num_states())
        throw GameError("per-state tables sized differently from the state set");

    long long full = 1;
    for (int i = 0; i < m.num_agents; ++i) full *= m.num_actions(i);

    for (StateId s = 0; s < m.num_states(); ++s) {
        if (static_cast<int>(m.available[s].size()) != m.num_agents)
            throw GameError("availability row arity wrong at state " + m.state_names[s]);
        for (int i = 0; i < m.num_agents; ++i) {
            const auto& av = m.available[s][i];
            if (av.empty())
                throw GameError("agent " + std::to_string(i + 1) +
                                " has no available action at state " + m.state_names[s]);
            if (!std::is_sorted(av.begin(), av.end()) ||
                std::adjacent_find(av.begin(), av.end()) != av.end())
                throw GameError("availability list unsorted or duplicated for agent " +
                                std::to_string(i + 1) + " at state " + m.state_names[s]);
            for (ActionId a : av)
                if (a < 0 || a >= m.num_actions(i))
                    throw GameError("availability references unknown action at state " +
                                    m.state_names[s]);
        }
        if (static_cast<long long>(m.transition[s].size()) != full)
            throw GameError("transition row wrong size at state " + m.state_names[s]);

        // Totality on available profiles, undefinedness elsewhere.
        std::vector<char> avail_key(full, 0);
        for (const Profile& p : m.available_profiles(s)) {
            long long key = m.profile_key(p);
            avail_key[key] = 1;
            StateId t = m.transition[s][key];
            if (t < 0 || t >= m.num_states())
                throw GameError("missing transition at state " + m.state_names[s] +
                                " for profile " + profile_text(m, p));
        }
        for (long long key = 0; key < full; ++key)
            if (!avail_key[key] && m.transition[s][key] != -1) {
                Profile p(m.num_agents);
                long long k = key;
                for (int i = m.num_agents - 1; i >= 0; --i) {
                    p[i] = static_cast<ActionId>(k % m.num_actions(i));
                    k /= m.num_actions(i);
                }
                throw GameError("transition defined on unavailable profile " +
                                profile_text(m, p) + " at state " + m.state_names[s]);
            }
    }

    if (game.flavour == Flavour::Ltl) {
        if (!game.weights.empty())
            throw GameError("ltl game carries weight tables");
        if (static_cast<int>(game.labels.size()) != m.num_states())
            throw GameError("label table sized differently from the state set");
        for (StateId s = 0; s < m.num_states(); ++s)
            for (int p : game.labels[s])
                if (p < 0 || p >= static_cast<int>(game.props.size()))
                    throw GameError("label references unknown proposition at state " +
                                    m.state_names[s]);
        if (static_cast<int>(game.goals.size()) != m.num_agents)
            throw GameError("goal count differs from agent count");
        for (int i = 0; i < m.num_agents; ++i) {
            if (!game.goals[i])
                throw GameError("agent " + std::to_string(i + 1) + " has no goal");
            for (const std::string& a : ltl::atoms_of(game.goals[i]))
                if (game.prop_id(a) < 0)
                    throw GameError("goal of agent " + std::to_string(i + 1) +
                                    " mentions undeclared proposition " + a);
        }
    } else {
        if (!game.goals.empty() || !game.labels.empty() || !game.props.empty())
            throw GameError("mean-payoff game carries ltl data");
        if (static_cast<int>(game.weights.size()) != m.num_agents)
            throw GameError("weight table count differs from agent count");
        for (int i = 0; i < m.num_agents; ++i)
            if (static_cast<int>(game.weights[i].size()) != m.num_states())
                throw GameError("weight table of agent " + std::to_string(i + 1) +
                                " not total on states");
    }
}

bool is_one_shot_sink_game(const ConcurrentGameStructure& m) {
    for (const Profile& p : m.available_profiles(m.initial))
        if (!m.is_absorbing(m.raw_transition(m.initial, p))) return false;
    return true;
}

}  // namespace ccgs
