#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sg {

inline constexpr int kMaxPlayers = 32;

// A coalition of players drawn from 1..n, packed into a 32-bit word
// (player i occupies bit i-1).
class PlayerSet {
 public:
  constexpr PlayerSet() = default;

  static constexpr PlayerSet from_mask(std::uint32_t mask) {
    PlayerSet s;
    s.mask_ = mask;
    return s;
  }
  // Throws InvalidArgument for indices outside 1..32.
  static PlayerSet of(std::initializer_list<int> players);
  static PlayerSet of(const std::vector<int>& players);
  static constexpr PlayerSet grand(int n) {
    return from_mask(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1u);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return player >= 1 && player <= kMaxPlayers &&
           ((mask_ >> (player - 1)) & 1u) != 0;
  }
  constexpr bool subset_of(PlayerSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(PlayerSet other) const {
    return (mask_ & other.mask_) != 0;
  }
  // Highest member, or 0 for the empty set.
  constexpr int max_player() const { return 32 - std::countl_zero(mask_); }

  PlayerSet with(int player) const;
  PlayerSet without(int player) const;
  constexpr PlayerSet complement(int n) const {
    return from_mask(grand(n).mask_ & ~mask_);
  }

  std::vector<int> members() const;

  friend constexpr PlayerSet operator|(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr PlayerSet operator&(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr PlayerSet operator-(PlayerSet a, PlayerSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(PlayerSet, PlayerSet) = default;
  friend constexpr auto operator<=>(PlayerSet a, PlayerSet b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint32_t mask_ = 0;
};

// "{1,2,3}"; the empty set prints as "{}".
std::string to_string(PlayerSet s);

// Parses "{1,2,3}" or "1 2 3" (whitespace or comma separated).
PlayerSet parse_player_set(const std::string& text);

// Orders coalitions by their sorted member lists, e.g. {1,2} < {1,3} < {2}.
bool lex_less(PlayerSet a, PlayerSet b);

}  // namespace sg
