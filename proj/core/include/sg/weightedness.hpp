#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sg/game.hpp"
#include "sg/rational.hpp"
#include "sg/ternary.hpp"
#include "sg/trading.hpp"

namespace sg {

enum class Flavor { weighted, rough };

// [quota; w_1..w_n]. Weighted: X wins iff w(X) >= quota. Rough: w(X) > quota
// forces a win, w(X) < quota forces a loss, and not everything is zero.
struct Representation {
  std::vector<Rational> weights;
  Rational quota;
  Flavor flavor = Flavor::weighted;
};

// Full check against the game: a 2^n sweep for n <= 20, the minimal winning
// and maximal losing antichains above that. Throws InvalidArgument for a
// negative weight or a length mismatch.
bool verify_representation(const SimpleGame& game, const Representation& rep);

// Clamps negative weights to zero and picks the quota the solver uses
// (weighted: min over winning coalitions; rough: midpoint of
// [max losing, min winning]). nullopt when the weights do not separate.
std::optional<Representation> representation_from_weights(const SimpleGame& game,
                                                          std::vector<Rational> weights,
                                                          Flavor flavor);

// One summand r * v_{X,Y} of a Farkas combination; X winning, Y losing.
struct WitnessTerm {
  PlayerSet winner;
  PlayerSet loser;
  std::uint64_t multiplicity = 0;
};

// sum_i r_i v_{X_i,Y_i} + u = 0 with integer r_i > 0 and u >= 0.
// From check_weighted: u = 0. From check_rough: every u_i >= 1.
struct FarkasWitness {
  int players = 0;
  std::vector<WitnessTerm> terms;
  std::vector<std::uint64_t> slack;

  std::uint64_t total_multiplicity() const;
  // Exact check of the defining identity.
  bool balanced() const;
};

using WeightednessResult = std::variant<Representation, FarkasWitness>;

// Decides weightedness (n <= 20). The representation branch has been swept
// against every coalition; the witness branch has u = 0 and its trading
// transform verifies as a certificate of non-weightedness.
WeightednessResult check_weighted(const SimpleGame& game);

// Decides rough weightedness (n <= 20). The witness branch has u >= 1 in
// every coordinate.
WeightednessResult check_rough(const SimpleGame& game);

// Non-potent certificate (X_1..X_j; Y_1..Y_j) from a witness with u = 0.
Certificate certificate_from_witness(const SimpleGame& game, const FarkasWitness& witness);

// Absorbs unit vectors into terms with a -1 in that coordinate until u = 1,
// then appends (P, {}). The result verifies as a potent certificate.
Certificate normalize_witness(const SimpleGame& game, const FarkasWitness& witness);

}  // namespace sg
