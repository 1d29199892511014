#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sg/game.hpp"
#include "sg/rational.hpp"

namespace sg {

// The seven lines {1,2,3} {3,4,5} {1,5,6} {1,4,7} {2,5,7} {3,6,7} {2,4,6}.
SimpleGame fano();

// From the Sylvester matrix of order 2^k with the first row and column
// stripped: row i becomes the coalition of columns holding +1. k in 3..4.
SimpleGame hadamard_game(int k);

// Minimal members of the n cyclic shifts of `pattern` (player n wraps to 1).
SimpleGame cyclic_game(PlayerSet pattern, int n);

// Lines of PG(2, q) as the translates of the least perfect difference set
// modulo q^2 + q + 1. q in {2, 3, 5}.
SimpleGame projective_game(int q);
// The difference set used above, residues in increasing order.
std::vector<int> least_difference_set(int q);

// {1,2}, {3,4,5} and every 4-set containing neither. n in 5..20.
SimpleGame gn2_game(int n);

// Six 3-sets, one of each remaining complementary pair of 3-sets, and all
// 4-sets: a constant-sum game with rough representation [3; 1 1 1 1 1 1].
SimpleGame example2_game();
// Minimal winning {1,2,3} {3,4,5} {1,5,6} {2,4,6} {1,2,6}.
SimpleGame example_proper6_game();
// 5 permanent members of weight 7, 10 others of weight 1, quota 39.
SimpleGame un_security_council();

// X wins iff w(X) >= quota (n <= 20).
SimpleGame threshold_game(std::span<const Rational> weights, const Rational& quota);

// Player relabeling sending g onto h, as perm[i-1] = image of i.
std::optional<std::vector<int>> find_isomorphism(const SimpleGame& g, const SimpleGame& h);
bool is_isomorphic(const SimpleGame& g, const SimpleGame& h);
SimpleGame relabel(const SimpleGame& g, std::span<const int> perm);

// A pattern containing player 1 whose cyclic game is isomorphic to g, if any.
std::optional<PlayerSet> find_cyclic_generator(const SimpleGame& g);

}  // namespace sg
