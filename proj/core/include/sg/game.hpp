#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sg/player_set.hpp"

namespace sg {

// Exhaustive sweeps (classification by complementary pairs, winning tables,
// representation checks) are limited to this many players.
inline constexpr int kMaxSweepPlayers = 20;

// A simple game on players 1..n stored by its minimal winning coalitions.
// Winning and losing coalitions are implicit: X wins iff it contains some
// minimal winning coalition. Values are immutable after construction.
class SimpleGame {
 public:
  // Validates instead of normalising: the family must be a nonempty antichain
  // of coalitions inside [n] not containing the empty coalition.
  SimpleGame(int n, std::vector<PlayerSet> min_winning);

  // Normalising constructor: keeps the inclusion-minimal members of an
  // arbitrary (nonempty, non-trivial) family of winning coalitions.
  static SimpleGame from_winning_family(int n, std::span<const PlayerSet> family);

  int players() const { return n_; }
  PlayerSet grand() const { return PlayerSet::grand(n_); }
  // Sorted by mask; the canonical representation of the game.
  const std::vector<PlayerSet>& min_winning() const { return min_winning_; }

  // Throws InvalidArgument if x has members outside 1..n.
  bool is_winning(PlayerSet x) const;

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;

 private:
  int n_;
  std::vector<PlayerSet> min_winning_;
};

struct GameClass {
  bool proper = false;
  bool strong = false;
  bool constant_sum = false;
  friend bool operator==(const GameClass&, const GameClass&) = default;
};

// Bit per coalition (index = mask) telling whether it is winning.
class WinningTable {
 public:
  explicit WinningTable(const SimpleGame& game);

  int players() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(winning_.size()); }
  bool winning(std::uint32_t mask) const { return winning_[mask] != 0; }
  bool winning(PlayerSet x) const { return winning_[x.mask()] != 0; }
  std::uint64_t count_winning() const;

 private:
  int n_;
  std::vector<std::uint8_t> winning_;
};

GameClass classify(const SimpleGame& game);
// The same predicates derived from the antichains alone (pairwise
// intersection of minimal winning coalitions, pairwise non-covering of
// maximal losing ones); valid for every n <= 32.
GameClass classify_structural(const SimpleGame& game);

// Maximal losing coalitions, as complements of the minimal transversals of
// the minimal winning coalitions. Sorted by mask.
std::vector<PlayerSet> maximal_losing(const SimpleGame& game);
// Same set by a full 2^n sweep (n <= 20).
std::vector<PlayerSet> maximal_losing_bruteforce(const SimpleGame& game);
// Inclusion-minimal sets meeting every member of `edges`.
std::vector<PlayerSet> minimal_transversals(std::span<const PlayerSet> edges);
// Inclusion-minimal members of `family`, deduplicated and sorted by mask.
std::vector<PlayerSet> minimal_members(std::span<const PlayerSet> family);

// G* = (P, L^c): X wins in G* iff X^c loses in G.
SimpleGame dual(const SimpleGame& game);

struct SpecialPlayers {
  PlayerSet weak_dictators;
  PlayerSet vetoers;
  bool has_losing_n_minus_1 = false;
};
SpecialPlayers find_special_players(const SimpleGame& game);

// One line per minimal winning coalition, e.g. "{1,2} {3,4,5}".
std::string describe(const SimpleGame& game);

}  // namespace sg
