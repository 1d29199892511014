#include "sg/game_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "sg/errors.hpp"

namespace sg {
namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

struct Field {
  std::string key;
  std::string value;
  std::size_t value_column;  // 1-based
};

Field split_field(const std::string& line, std::size_t lineno) {
  auto colon = line.find(':');
  if (colon == std::string::npos) {
    auto col = line.find_first_not_of(" \t");
    throw ParseError(lineno, col + 1, "expected 'key: value'");
  }
  auto kb = line.find_first_not_of(" \t");
  auto ke = line.find_last_not_of(" \t", colon == 0 ? 0 : colon - 1);
  std::string key = (kb < colon && ke != std::string::npos) ? line.substr(kb, ke - kb + 1) : "";
  return Field{key, line.substr(colon + 1), colon + 2};
}

// Parses whitespace-separated positive integers, reporting the column of the
// first bad token.
std::vector<int> parse_ints(const std::string& text, std::size_t lineno, std::size_t base_col) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    long value = 0;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError(lineno, base_col + i, "expected a player index");
      }
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError(lineno, base_col + start, "integer too large");
      ++i;
    }
    out.push_back(static_cast<int>(value));
  }
  return out;
}

}  // namespace

SimpleGame parse_game(std::istream& in) {
  std::optional<int> n;
  std::vector<PlayerSet> coalitions;
  std::vector<std::size_t> lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (blank(line)) continue;
    Field f = split_field(line, lineno);
    if (f.key == "players") {
      if (n) throw ParseError(lineno, 1, "duplicate 'players' line");
      if (!coalitions.empty()) throw ParseError(lineno, 1, "'players' must come first");
      auto v = parse_ints(f.value, lineno, f.value_column);
      if (v.size() != 1) throw ParseError(lineno, f.value_column, "expected one player count");
      if (v[0] < 1 || v[0] > kMaxPlayers) {
        throw ParseError(lineno, f.value_column,
                         "player count must lie in 1.." + std::to_string(kMaxPlayers));
      }
      n = v[0];
    } else if (f.key == "minwin") {
      if (!n) throw ParseError(lineno, 1, "'players' line must precede coalitions");
      auto v = parse_ints(f.value, lineno, f.value_column);
      if (v.empty()) throw ParseError(lineno, f.value_column, "the empty coalition cannot be winning");
      PlayerSet s;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < 1 || v[k] > *n) {
          throw ParseError(lineno, f.value_column,
                           "player " + std::to_string(v[k]) + " outside 1.." + std::to_string(*n));
        }
        if (k > 0 && v[k] <= v[k - 1]) {
          throw ParseError(lineno, f.value_column, "players must be strictly increasing");
        }
        s = s.with(v[k]);
      }
      for (std::size_t k = 0; k < coalitions.size(); ++k) {
        if (coalitions[k].subset_of(s) || s.subset_of(coalitions[k])) {
          throw ParseError(lineno, f.value_column,
                           "not an antichain: " + to_string(s) + " (line " +
                               std::to_string(lineno) + ") and " + to_string(coalitions[k]) +
                               " (line " + std::to_string(lines[k]) + ") are comparable");
        }
      }
      coalitions.push_back(s);
      lines.push_back(lineno);
    } else {
      throw ParseError(lineno, 1, "unknown key '" + f.key + "'");
    }
  }
  if (!n) throw ParseError(lineno + 1, 1, "missing 'players' line");
  if (coalitions.empty()) throw ParseError(lineno + 1, 1, "no 'minwin' lines");
  return SimpleGame(*n, std::move(coalitions));
}

SimpleGame parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

SimpleGame read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_game(in);
}

std::string format_game(const SimpleGame& game) {
  std::string out = "players: " + std::to_string(game.players()) + "\n";
  for (PlayerSet m : game.min_winning()) {
    out += "minwin:";
    for (int p : m.members()) out += " " + std::to_string(p);
    out += '\n';
  }
  return out;
}

void write_game_file(const std::string& path, const SimpleGame& game) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << format_game(game);
}

}  // namespace sg
