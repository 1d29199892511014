#include "sg/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sg/errors.hpp"

namespace sg {

TernaryVector::TernaryVector(std::vector<int> coords) {
  coords_.reserve(coords.size());
  for (int c : coords) {
    if (c < -1 || c > 1) {
      throw InvalidArgument("ternary coordinate " + std::to_string(c) + " outside {-1,0,1}");
    }
    coords_.push_back(static_cast<std::int8_t>(c));
  }
}

int TernaryVector::coordinate_sum() const {
  return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool TernaryVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int8_t c) { return c == 0; });
}

TernaryVector TernaryVector::raised(int player) const {
  if (!can_raise(player)) {
    throw InvalidArgument("v + e_" + std::to_string(player) + " leaves T^n");
  }
  TernaryVector out = *this;
  ++out.coords_[static_cast<std::size_t>(player - 1)];
  return out;
}

TernaryVector TernaryVector::negated() const {
  TernaryVector out = *this;
  for (auto& c : out.coords_) c = static_cast<std::int8_t>(-c);
  return out;
}

TernaryVector vector_of_pair(PlayerSet x, PlayerSet y, int n) {
  const PlayerSet all = PlayerSet::grand(n);
  if (!x.subset_of(all) || !y.subset_of(all)) {
    throw InvalidArgument("coalition outside 1.." + std::to_string(n));
  }
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i - 1)] = (x.contains(i) ? 1 : 0) - (y.contains(i) ? 1 : 0);
  }
  return TernaryVector(std::move(c));
}

PlayerSet positive_part(const TernaryVector& v) {
  PlayerSet s;
  for (int i = 1; i <= v.dimension(); ++i) {
    if (v.at(i) > 0) s = s.with(i);
  }
  return s;
}

PlayerSet negative_part(const TernaryVector& v) {
  PlayerSet s;
  for (int i = 1; i <= v.dimension(); ++i) {
    if (v.at(i) < 0) s = s.with(i);
  }
  return s;
}

std::string to_string(const TernaryVector& v) {
  std::string out = "(";
  for (int i = 0; i < v.dimension(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[static_cast<std::size_t>(i)]);
  }
  out += ')';
  return out;
}

std::size_t TernaryVectorHash::operator()(const TernaryVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : v.coords()) {
    h ^= static_cast<std::size_t>(c + 1);
    h *= 1099511628211ull;
  }
  return h;
}

void for_each_ideal_member(const SimpleGame& game, IdealMode mode,
                           const std::function<void(PlayerSet, PlayerSet, const TernaryVector&)>& fn) {
  const int n = game.players();
  if (n > kMaxIdealPlayers) {
    throw Inconclusive("ideal enumeration is capped at " + std::to_string(kMaxIdealPlayers) +
                       " players");
  }
  const WinningTable table(game);
  std::vector<PlayerSet> winners;
  std::vector<PlayerSet> losers;
  if (mode == IdealMode::min_win_cross_all_losing) {
    winners = game.min_winning();
  } else {
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (table.winning(x)) winners.push_back(PlayerSet::from_mask(x));
    }
  }
  if (mode == IdealMode::all_winning_cross_max_losing) {
    losers = maximal_losing(game);
  } else {
    for (std::uint32_t y = 0; y < table.size(); ++y) {
      if (!table.winning(y)) losers.push_back(PlayerSet::from_mask(y));
    }
  }
  for (PlayerSet x : winners) {
    for (PlayerSet y : losers) fn(x, y, vector_of_pair(x, y, n));
  }
}

std::vector<TernaryVector> ideal_members(const SimpleGame& game, IdealMode mode) {
  std::unordered_set<TernaryVector, TernaryVectorHash> seen;
  for_each_ideal_member(game, mode, [&](PlayerSet, PlayerSet, const TernaryVector& v) {
    seen.insert(v);
  });
  std::vector<TernaryVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ideal(const std::vector<TernaryVector>& set, int n) {
  std::unordered_set<TernaryVector, TernaryVectorHash> members(set.begin(), set.end());
  for (const auto& v : set) {
    if (v.dimension() != n) throw InvalidArgument("vector dimension mismatch");
    for (int i = 1; i <= n; ++i) {
      if (v.can_raise(i) && !members.contains(v.raised(i))) return false;
    }
  }
  return true;
}

}  // namespace sg
