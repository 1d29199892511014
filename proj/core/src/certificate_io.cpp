#include "sg/certificate_io.hpp"

#include <cctype>
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

std::string format_entry(PlayerSet c, std::uint64_t m) {
  std::string out = to_string(c);
  if (m != 1) out += "^" + std::to_string(m);
  return out;
}

}  // namespace

Certificate parse_certificate(std::istream& in) {
  enum class Section { none, winners, losers } section = Section::none;
  Certificate c;
  bool saw_potent = false;
  bool saw_winners = false;
  bool saw_losers = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.rfind("potent:", 0) == 0) {
      std::string v = trim(line.substr(7));
      if (v == "true") {
        c.potent = true;
      } else if (v == "false") {
        c.potent = false;
      } else {
        throw ParseError(lineno, 9, "potent must be true or false");
      }
      saw_potent = true;
      continue;
    }
    if (line == "winners:") {
      if (saw_winners) throw ParseError(lineno, 1, "duplicate winners section");
      section = Section::winners;
      saw_winners = true;
      continue;
    }
    if (line == "losers:") {
      if (saw_losers) throw ParseError(lineno, 1, "duplicate losers section");
      section = Section::losers;
      saw_losers = true;
      continue;
    }
    if (section == Section::none) throw ParseError(lineno, 1, "coalition outside a winners/losers section");
    if (line.front() != '{') throw ParseError(lineno, 1, "expected '{' to start a coalition");
    auto close = line.find('}');
    if (close == std::string::npos) throw ParseError(lineno, line.size(), "missing '}'");
    PlayerSet s;
    try {
      s = parse_player_set(line.substr(0, close + 1));
    } catch (const ParseError& e) {
      throw ParseError(lineno, 1, e.what());
    }
    std::uint64_t mult = 1;
    std::string rest = trim(line.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '^' || rest.size() < 2) throw ParseError(lineno, close + 2, "expected '^m' multiplicity");
      mult = 0;
      for (std::size_t i = 1; i < rest.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(rest[i]))) {
          throw ParseError(lineno, close + 2 + i, "multiplicity must be a positive integer");
        }
        mult = mult * 10 + static_cast<std::uint64_t>(rest[i] - '0');
        if (mult > (std::uint64_t{1} << 48)) throw ParseError(lineno, close + 2, "multiplicity too large");
      }
      if (mult == 0) throw ParseError(lineno, close + 2, "multiplicity must be positive");
    }
    (section == Section::winners ? c.transform.winners : c.transform.losers).add(s, mult);
  }
  if (!saw_potent) throw ParseError(lineno + 1, 1, "missing 'potent:' line");
  if (!saw_winners || !saw_losers) throw ParseError(lineno + 1, 1, "missing winners or losers section");
  return c;
}

Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_certificate(in);
}

std::string format_certificate(const Certificate& c) {
  std::string out = std::string("potent: ") + (c.potent ? "true" : "false") + "\nwinners:\n";
  for (const auto& [s, m] : c.transform.winners.entries()) out += format_entry(s, m) + "\n";
  out += "losers:\n";
  for (const auto& [s, m] : c.transform.losers.entries()) out += format_entry(s, m) + "\n";
  return out;
}

std::string format_multiset(const CoalitionMultiset& ms) {
  std::string out;
  for (const auto& [s, m] : ms.entries()) {
    if (!out.empty()) out += ' ';
    out += format_entry(s, m);
  }
  return out;
}

}  // namespace sg
