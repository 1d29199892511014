#include "sg/player_set.hpp"

#include <algorithm>
#include <cctype>

#include "sg/errors.hpp"

namespace sg {
namespace {

void check_index(int player) {
  if (player < 1 || player > kMaxPlayers) {
    throw InvalidArgument("player index " + std::to_string(player) +
                          " outside 1.." + std::to_string(kMaxPlayers));
  }
}

}  // namespace

PlayerSet PlayerSet::of(std::initializer_list<int> players) {
  PlayerSet s;
  for (int p : players) s = s.with(p);
  return s;
}

PlayerSet PlayerSet::of(const std::vector<int>& players) {
  PlayerSet s;
  for (int p : players) s = s.with(p);
  return s;
}

PlayerSet PlayerSet::with(int player) const {
  check_index(player);
  return from_mask(mask_ | (std::uint32_t{1} << (player - 1)));
}

PlayerSet PlayerSet::without(int player) const {
  check_index(player);
  return from_mask(mask_ & ~(std::uint32_t{1} << (player - 1)));
}

std::vector<int> PlayerSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

std::string to_string(PlayerSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

PlayerSet parse_player_set(const std::string& text) {
  std::string body = text;
  auto first = body.find_first_not_of(" \t");
  auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) return PlayerSet{};
  body = body.substr(first, last - first + 1);
  if (body.front() == '{') {
    if (body.back() != '}') throw ParseError(0, 0, "unterminated coalition '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  PlayerSet s;
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(0, 0, "unexpected character '" + std::string(1, c) +
                                 "' in coalition '" + text + "'");
    }
    int value = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + (body[i] - '0');
      if (value > 1000) throw ParseError(0, 0, "player index too large in '" + text + "'");
      ++i;
    }
    if (value < 1 || value > kMaxPlayers) {
      throw ParseError(0, 0, "player index " + std::to_string(value) + " out of range in '" + text + "'");
    }
    s = s.with(value);
  }
  return s;
}

bool lex_less(PlayerSet a, PlayerSet b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace sg
