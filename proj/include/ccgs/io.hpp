#pragma once

#include <string>
#include <vector>

#include "ccgs/game.hpp"
#include "ccgs/strategy.hpp"
#include "ccgs/verdict.hpp"

namespace ccgs {

struct ParseFileError : std::runtime_error {
    int line;
    ParseFileError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

// Line-oriented game format: game/agents/states/init/actions/label/weight/
// trans/goal directives, '#' comments, blank-line tolerant. Validates the
// result before returning.
Game parse_game(const std::string& text);
std::string print_game(const Game& game);

// Strategy files: one or more "strategy <agent>" blocks, each either
// "memoryless" with map lines or "machine" with mstates/minit/out/next lines.
// Returns (agent, strategy) pairs in file order.
std::vector<std::pair<int, Strategy>> parse_strategies(const std::string& text,
                                                       const Game& game);
std::string print_strategies(const Game& game,
                             const std::vector<std::pair<int, Strategy>>& strats);

// Full profile: every agent covered exactly once.
StrategyProfile parse_profile(const std::string& text, const Game& game);

std::string verdict_to_json(const Game& game, const Verdict& v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ccgs
