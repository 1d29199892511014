#pragma once

#include <optional>

#include "sg/game.hpp"
#include "sg/rational.hpp"

namespace sg {

// A potent certificate needs ceil(n/d) + 1 coalitions, where
// d = max |Y| over losing Y minus min |X| over winning X: the coordinate sum
// of each v_{X,Y} is at least -d and v_{P,{}} contributes n. nullopt
// (Unbounded) when d <= 0.
std::optional<std::uint64_t> coord_sum_lower_bound_g(const SimpleGame& game);

// (n+1) * ceil(n^(n/2)): every n-player game that is this-trade robust is
// weighted. Exact for even n; the ceiling keeps it a valid bound for odd n.
BigInt taylor_zwicker_cap(int n);

struct BoundReport {
  int n = 0;
  BigInt tz_upper;
  std::optional<std::uint64_t> coord_sum_lower_g;
};

BoundReport bounds_for(const SimpleGame& game);

}  // namespace sg
