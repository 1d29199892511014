#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sg/game.hpp"
#include "sg/player_set.hpp"

namespace sg {

// Element of T^n = {-1, 0, 1}^n. Coordinates are addressed by player
// (1-based) through at(); operator[] is the raw 0-based slot.
class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(int n) : coords_(static_cast<std::size_t>(n), 0) {}
  // Throws InvalidArgument if any coordinate lies outside {-1, 0, 1}.
  explicit TernaryVector(std::vector<int> coords);

  int dimension() const { return static_cast<int>(coords_.size()); }
  int at(int player) const { return coords_.at(static_cast<std::size_t>(player - 1)); }
  int operator[](std::size_t slot) const { return coords_[slot]; }
  int coordinate_sum() const;
  bool is_zero() const;

  // v + e_i; throws InvalidArgument when the result would leave T^n.
  bool can_raise(int player) const { return at(player) < 1; }
  TernaryVector raised(int player) const;
  TernaryVector negated() const;

  const std::vector<std::int8_t>& coords() const { return coords_; }

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;
  friend auto operator<=>(const TernaryVector&, const TernaryVector&) = default;

 private:
  std::vector<std::int8_t> coords_;
};

// v_{X,Y} = chi(X) - chi(Y).
TernaryVector vector_of_pair(PlayerSet x, PlayerSet y, int n);

// Positive and negative supports.
PlayerSet positive_part(const TernaryVector& v);
PlayerSet negative_part(const TernaryVector& v);

std::string to_string(const TernaryVector& v);

struct TernaryVectorHash {
  std::size_t operator()(const TernaryVector& v) const noexcept;
};

// Which (winning, losing) pairs to draw vectors of I(G) from.
enum class IdealMode {
  all,                            // every winning X, every losing Y
  min_win_cross_all_losing,       // minimal winning X, every losing Y
  all_winning_cross_max_losing,   // every winning X, maximal losing Y
};

inline constexpr int kMaxIdealPlayers = 12;

// Streams v_{X,Y} for each admissible pair (duplicates included), in order of
// X then Y by mask. Throws Inconclusive above kMaxIdealPlayers players.
void for_each_ideal_member(const SimpleGame& game, IdealMode mode,
                           const std::function<void(PlayerSet, PlayerSet, const TernaryVector&)>& fn);
// Distinct members, sorted.
std::vector<TernaryVector> ideal_members(const SimpleGame& game, IdealMode mode);

// True iff v in S and v + e_i in T^n imply v + e_i in S.
bool is_ideal(const std::vector<TernaryVector>& set, int n);

}  // namespace sg
