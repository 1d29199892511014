#include "sg/representation_io.hpp"

#include <fstream>
#include <sstream>

#include "sg/errors.hpp"

namespace sg {
namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& raw) {
  auto hash = raw.find('#');
  return trim(hash == std::string::npos ? raw : raw.substr(0, hash));
}

Rational rational_at(const std::string& token, std::size_t line, std::size_t col) {
  try {
    return parse_rational(token);
  } catch (const Error& e) {
    throw ParseError(line, col, e.what());
  }
}

std::vector<Rational> rationals(const std::string& text, std::size_t line, std::size_t col) {
  std::istringstream in(text);
  std::vector<Rational> out;
  std::string tok;
  while (in >> tok) out.push_back(rational_at(tok, line, col));
  return out;
}

std::string short_rational(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : to_string(r);
}

Representation parse_inline(const std::string& line, std::size_t lineno) {
  auto semi = line.find(';');
  auto close = line.find(']');
  if (semi == std::string::npos || close == std::string::npos || close < semi) {
    throw ParseError(lineno, 1, "expected '[quota; w1 w2 ...]'");
  }
  Representation rep;
  rep.quota = rational_at(trim(line.substr(1, semi - 1)), lineno, 2);
  rep.weights = rationals(line.substr(semi + 1, close - semi - 1), lineno, semi + 2);
  std::string tail = trim(line.substr(close + 1));
  if (!tail.empty()) {
    try {
      rep.flavor = parse_flavor(tail);
    } catch (const Error& e) {
      throw ParseError(lineno, close + 2, e.what());
    }
  }
  return rep;
}

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::weighted ? "weighted" : "rough"; }

Flavor parse_flavor(const std::string& text) {
  if (text == "weighted") return Flavor::weighted;
  if (text == "rough") return Flavor::rough;
  throw InvalidArgument("unknown flavor '" + text + "'");
}

Representation parse_representation(std::istream& in) {
  Representation rep;
  bool quota = false;
  bool weights = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (quota || weights) throw ParseError(lineno, 1, "inline representation mixed with keyed lines");
      rep = parse_inline(line, lineno);
      quota = weights = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, 1, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "quota") {
      rep.quota = rational_at(value, lineno, colon + 2);
      quota = true;
    } else if (key == "weights") {
      rep.weights = rationals(value, lineno, colon + 2);
      weights = true;
    } else if (key == "flavor") {
      try {
        rep.flavor = parse_flavor(value);
      } catch (const Error& e) {
        throw ParseError(lineno, colon + 2, e.what());
      }
    } else {
      throw ParseError(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!quota || !weights) throw ParseError(lineno + 1, 1, "representation needs quota and weights");
  return rep;
}

Representation parse_representation(const std::string& text) {
  std::istringstream in(text);
  return parse_representation(in);
}

Representation read_representation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_representation(in);
}

std::string format_representation(const Representation& rep) {
  std::string out = "flavor: " + to_string(rep.flavor) + "\nquota: " + to_string(rep.quota) + "\nweights:";
  for (const auto& w : rep.weights) out += " " + to_string(w);
  return out + "\n";
}

std::string format_representation_inline(const Representation& rep) {
  std::string out = "[" + short_rational(rep.quota) + ";";
  for (const auto& w : rep.weights) out += " " + short_rational(w);
  return out + "] " + to_string(rep.flavor);
}

FarkasWitness parse_witness(std::istream& in) {
  FarkasWitness w;
  bool saw_players = false;
  bool saw_u = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, 1, "expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "players") {
      try {
        w.players = std::stoi(value);
      } catch (const std::exception&) {
        throw ParseError(lineno, colon + 2, "player count must be an integer");
      }
      if (w.players < 1 || w.players > kMaxPlayers) throw ParseError(lineno, colon + 2, "player count out of range");
      saw_players = true;
    } else if (key == "term") {
      if (!saw_players) throw ParseError(lineno, 1, "'players:' must come first");
      // (v)^r {X} {Y}; the vector is recomputed from the pair and compared.
      auto close = value.find(')');
      auto caret = value.find('^', close);
      auto open_x = value.find('{', close);
      auto close_x = value.find('}', open_x);
      auto open_y = value.find('{', close_x);
      auto close_y = value.find('}', open_y);
      if (value.empty() || value.front() != '(' || close == std::string::npos || caret == std::string::npos ||
          open_x == std::string::npos || close_x == std::string::npos || open_y == std::string::npos ||
          close_y == std::string::npos) {
        throw ParseError(lineno, colon + 2, "expected '(v)^r {X} {Y}'");
      }
      WitnessTerm t;
      try {
        t.multiplicity = std::stoull(value.substr(caret + 1, open_x - caret - 1));
        t.winner = parse_player_set(value.substr(open_x, close_x - open_x + 1));
        t.loser = parse_player_set(value.substr(open_y, close_y - open_y + 1));
      } catch (const std::exception& e) {
        throw ParseError(lineno, colon + 2, e.what());
      }
      if (t.multiplicity == 0) throw ParseError(lineno, colon + 2, "multiplicity must be positive");
      const std::string printed = to_string(vector_of_pair(t.winner, t.loser, w.players));
      if (printed != value.substr(0, close + 1)) {
        throw ParseError(lineno, colon + 2, "vector does not match its pair, expected " + printed);
      }
      w.terms.push_back(t);
    } else if (key == "u") {
      if (!saw_players) throw ParseError(lineno, 1, "'players:' must come first");
      std::istringstream vs(value);
      std::uint64_t u = 0;
      while (vs >> u) w.slack.push_back(u);
      if (!vs.eof() || w.slack.size() != static_cast<std::size_t>(w.players)) {
        throw ParseError(lineno, colon + 2, "u needs one nonnegative integer per player");
      }
      saw_u = true;
    } else {
      throw ParseError(lineno, 1, "unknown key '" + key + "'");
    }
  }
  if (!saw_players || !saw_u) throw ParseError(lineno + 1, 1, "witness needs players and u lines");
  return w;
}

FarkasWitness parse_witness(const std::string& text) {
  std::istringstream in(text);
  return parse_witness(in);
}

std::string format_witness(const FarkasWitness& w) {
  std::string out = "players: " + std::to_string(w.players) + "\n";
  for (const auto& t : w.terms) {
    out += "term: " + to_string(vector_of_pair(t.winner, t.loser, w.players)) + "^" +
           std::to_string(t.multiplicity) + " " + to_string(t.winner) + " " + to_string(t.loser) + "\n";
  }
  out += "u:";
  for (auto u : w.slack) out += " " + std::to_string(u);
  return out + "\n";
}

}  // namespace sg
