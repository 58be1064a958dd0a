#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccgs/ltl.hpp"

namespace ccgs {

using StateId = int;
using ActionId = int;  // index into the owning agent's action list
using Profile = std::vector<ActionId>;  // one action per agent

struct GameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConcurrentGameStructure {
    int num_agents = 0;
    std::vector<std::string> state_names;
    StateId initial = 0;
    std::vector<std::vector<std::string>> action_names;  // per agent
    // available[s][i]: sorted action ids for agent i at state s
    std::vector<std::vector<std::vector<ActionId>>> available;
    // transition[s][profile_key]; -1 where undefined
    std::vector<std::vector<StateId>> transition;

    int num_states() const { return static_cast<int>(state_names.size()); }
    int num_actions(int agent) const {
        return static_cast<int>(action_names[agent].size());
    }
    long long profile_key(const Profile& p) const;
    // All profiles drawn from available actions at s, lexicographic in
    // (agent order, action order).
    std::vector<Profile> available_profiles(StateId s) const;
    StateId raw_transition(StateId s, const Profile& p) const;
    bool is_absorbing(StateId s) const;  // every available profile self-loops
    std::vector<StateId> reachable_states() const;
};

enum class Flavour { Ltl, MeanPayoff };

struct Game {
    ConcurrentGameStructure m;
    Flavour flavour = Flavour::Ltl;
    // LTL flavour
    std::vector<std::string> props;
    std::vector<std::set<int>> labels;       // per state, prop ids
    std::vector<ltl::Formula> goals;         // per agent
    // Mean-payoff flavour
    std::vector<std::vector<long long>> weights;  // [agent][state]

    std::set<std::string> label_names(StateId s) const;
    int prop_id(const std::string& name) const;  // -1 if absent
};

// Checks every structural invariant; throws GameError naming the first
// violation (offending state/agent/profile).
void validate_game(const Game& game);

// tau(s, a). Throws GameError if some a_i is unavailable at s.
StateId successor(const ConcurrentGameStructure& m, StateId s, const Profile& p);

// True when every play is one decision round into an absorbing state: all
// successors of the initial state (and every other reachable state) absorb.
// On such games the run is fully determined by the first action profile, so
// memoryless search is exhaustive.
bool is_one_shot_sink_game(const ConcurrentGameStructure& m);

}  // namespace ccgs
