#include "sg/bounds.hpp"

#include <algorithm>

#include "sg/errors.hpp"

namespace sg {

std::optional<std::uint64_t> coord_sum_lower_bound_g(const SimpleGame& game) {
  int min_win = game.players();
  for (PlayerSet m : game.min_winning()) min_win = std::min(min_win, m.size());
  int max_lose = 0;
  for (PlayerSet y : maximal_losing(game)) max_lose = std::max(max_lose, y.size());
  const int d = max_lose - min_win;
  if (d <= 0) return std::nullopt;
  const int n = game.players();
  return static_cast<std::uint64_t>((n + d - 1) / d + 1);
}

BigInt taylor_zwicker_cap(int n) {
  if (n < 1) throw InvalidArgument("taylor_zwicker_cap needs n >= 1");
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  // ceil(sqrt(n^n))
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), power.get_mpz_t());
  if (root * root != power) root += 1;
  return BigInt(n + 1) * root;
}

BoundReport bounds_for(const SimpleGame& game) {
  return BoundReport{game.players(), taylor_zwicker_cap(game.players()), coord_sum_lower_bound_g(game)};
}

}  // namespace sg
