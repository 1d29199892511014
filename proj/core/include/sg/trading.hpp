#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sg/game.hpp"
#include "sg/player_set.hpp"
#include "sg/ternary.hpp"

namespace sg {

// A multiset of coalitions kept as sorted (coalition, multiplicity) pairs,
// matching the {1,2}^5 notation.
class CoalitionMultiset {
 public:
  using Entry = std::pair<PlayerSet, std::uint64_t>;

  CoalitionMultiset() = default;
  CoalitionMultiset(std::initializer_list<Entry> entries);

  void add(PlayerSet coalition, std::uint64_t count = 1);
  // Removes one copy; returns false if the coalition is absent.
  bool remove_one(PlayerSet coalition);

  std::uint64_t total() const;
  std::uint64_t count(PlayerSet coalition) const;
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  // Occurrences of each player 1..n.
  std::vector<std::uint64_t> player_counts(int n) const;
  // One element per copy, in entry order.
  std::vector<PlayerSet> expand() const;

  friend bool operator==(const CoalitionMultiset&, const CoalitionMultiset&) = default;

 private:
  std::vector<Entry> entries_;
};

// (X_1..X_j; Y_1..Y_j) with the winners X and losers Y as multisets.
struct TradingTransform {
  CoalitionMultiset winners;
  CoalitionMultiset losers;

  std::uint64_t length() const { return winners.total(); }
  friend bool operator==(const TradingTransform&, const TradingTransform&) = default;
};

struct Certificate {
  TradingTransform transform;
  bool potent = false;

  std::uint64_t length() const { return transform.length(); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// True iff sum_i v_{X_i,Y_i} = 0 for the transform on n players. The vector
// sum over paired sequences and the per-player occurrence balance are both
// computed; a disagreement raises InternalError. Unequal side lengths raise
// InvalidArgument.
bool validate_transform(const TradingTransform& t, int n);

enum class CertificateStatus {
  valid,
  invalid_transform,   // sides unequal in length or unbalanced
  winner_not_winning,
  loser_not_losing,
  not_potent,          // potent flag set but P or the empty set is missing
};

struct CertificateVerdict {
  CertificateStatus status = CertificateStatus::valid;
  std::string detail;
  bool ok() const { return status == CertificateStatus::valid; }
  explicit operator bool() const { return ok(); }
};

CertificateVerdict verify_certificate(const SimpleGame& game, const Certificate& c);

enum class ElRole { winning, blocking };

// (Z_1..Z_2k) with k winning and k blocking entries. Blocking means the
// complement is losing.
struct ElSequence {
  std::vector<PlayerSet> coalitions;
  std::vector<ElRole> roles;

  std::size_t degree() const { return coalitions.size() / 2; }
};

// From a potent certificate (X_1..X_k, P; Y_1..Y_k, empty): the sequence
// (X_1..X_k; Y_1^c..Y_k^c). Throws InvalidArgument if c is not potent or has
// nothing besides the (P, empty) pair.
ElSequence el_from_potent(const Certificate& c, int n);

// Checks the roles against the game (InvalidArgument on mismatch or an odd /
// unbalanced sequence), then reports whether every player occurs in fewer
// than k of the 2k coalitions.
bool violates_at_least_half(const SimpleGame& game, const ElSequence& z);

}  // namespace sg
