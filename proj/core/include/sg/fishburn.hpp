#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sg/game.hpp"
#include "sg/ternary.hpp"

namespace sg {

struct WeightVector {
  std::vector<std::int64_t> weights;
  std::vector<TernaryVector> relations;
};

// Relations v_1..v_k of the weight vector in an order and with signs such
// that they sum to zero.
struct FishburnSystem {
  WeightVector weight_vector;
  int k = 0;
};

// Every v in T^n, v != 0, with v . w = 0, one per sign class: the first
// nonzero coordinate is +1. Sorted. n <= 12, weights positive.
std::vector<TernaryVector> find_relations(std::span<const std::int64_t> w);

// Rank over the rationals.
std::size_t rank_of(std::span<const TernaryVector> vectors);

// Checks the kth Fishburn condition: exactly k relations, signs summing to
// zero, and every proper subset linearly independent. On success returns the
// relations in find_relations order, signed so the first keeps +1 leading.
std::optional<FishburnSystem> fishburn_system(std::span<const std::int64_t> w, int k);
bool check_fishburn(std::span<const std::int64_t> w, int k);
// The same conditions for a system given with explicit order and signs.
bool is_fishburn_system(const FishburnSystem& f);

struct DoublingOptions {
  // Defaults to 2 w(P) + 1.
  std::optional<std::int64_t> threshold;
  // Make X_i' = Y_i + {n+i} the winning side instead of X_i + {n+i}.
  bool swap_sides = false;
};

struct DoublingGame {
  SimpleGame game;
  std::vector<std::int64_t> weights;  // all n + k players
  std::int64_t threshold = 0;
  std::vector<PlayerSet> on_threshold_winning;
  std::vector<PlayerSet> on_threshold_losing;
};

// Heavy player n+i has weight N - s_i with s_i = w(X_i); coalitions above N
// win, below N lose, and the 2k coalitions X_i + {n+i}, Y_i + {n+i} sit
// exactly on N. Throws InvalidArgument for an invalid system or threshold,
// InternalError if some other coalition weighs exactly N.
DoublingGame doubling_game(const FishburnSystem& f, const DoublingOptions& options = {});

}  // namespace sg
