#include "ccgs/lasso.hpp"

namespace ccgs {

namespace {

bool connected(const ConcurrentGameStructure& m, StateId s, StateId t) {
    for (const Profile& p : m.available_profiles(s))
        if (m.raw_transition(s, p) == t) return true;
    return false;
}

}  // namespace

bool successor_consistent(const ConcurrentGameStructure& m, const Lasso& l) {
    if (l.loop.empty()) return false;
    for (StateId s : l.stem)
        if (s < 0 || s >= m.num_states()) return false;
    for (StateId s : l.loop)
        if (s < 0 || s >= m.num_states()) return false;
    for (std::size_t i = 0; i + 1 < l.stem.size(); ++i)
        if (!connected(m, l.stem[i], l.stem[i + 1])) return false;
    if (!l.stem.empty() && !connected(m, l.stem.back(), l.loop.front())) return false;
    for (std::size_t i = 0; i + 1 < l.loop.size(); ++i)
        if (!connected(m, l.loop[i], l.loop[i + 1])) return false;
    return connected(m, l.loop.back(), l.loop.front());
}

std::string lasso_to_string(const Game& game, const Lasso& l) {
    std::string out;
    for (StateId s : l.stem) {
        out += game.m.state_names[s];
        out += " ";
    }
    out += "(";
    for (std::size_t i = 0; i < l.loop.size(); ++i) {
        if (i) out += " ";
        out += game.m.state_names[l.loop[i]];
    }
    out += ")^w";
    return out;
}

}  // namespace ccgs
