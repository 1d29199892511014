#pragma once

#include <iosfwd>
#include <string>

#include "sg/game.hpp"

namespace sg {

// Line-oriented ".game" text format:
//
//   players: 7
//   minwin: 1 2 3
//   minwin: 3 4 5
//
// '#' starts a comment and blank lines are ignored. Coalition members are
// 1-based and strictly increasing. Errors raise ParseError with line/column.
SimpleGame parse_game(std::istream& in);
SimpleGame parse_game(const std::string& text);
SimpleGame read_game_file(const std::string& path);

std::string format_game(const SimpleGame& game);
void write_game_file(const std::string& path, const SimpleGame& game);

}  // namespace sg
