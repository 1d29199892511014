#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "sg/rational.hpp"

namespace sg {

// { A x = b, x >= 0 } over the rationals, A stored row-major.
struct EqualitySystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;

  EqualitySystem(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c), b(r) {}
  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

struct FeasiblePoint {
  std::vector<Rational> x;
};

// y with y^T A >= 0 componentwise and y^T b < 0: proof that no x >= 0 solves
// A x = b.
struct FarkasRay {
  std::vector<Rational> y;
};

using FeasibilityResult = std::variant<FeasiblePoint, FarkasRay>;

struct SimplexStats {
  std::size_t pivots = 0;
};

// Phase-I primal simplex on a dense rational tableau with Bland's rule, so it
// terminates on degenerate systems. The returned object is re-checked
// exactly before it is handed back (InternalError if the check fails).
FeasibilityResult solve_feasibility(const EqualitySystem& system, SimplexStats* stats = nullptr);

enum class Sense { greater_equal, less_equal, equal };

// Inequality front end: rows sum_j a_ij x_j (sense) b_i, each variable either
// nonnegative or free. Converted to equality form with slack columns and
// split free variables.
struct InequalitySystem {
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense = Sense::greater_equal;
    Rational rhs;
  };
  std::size_t vars = 0;
  std::vector<bool> free_var;  // empty means every variable is nonnegative
  std::vector<Row> rows;
};

struct InequalityPoint {
  std::vector<Rational> x;
};
// Multipliers on the original rows: sum_i y_i a_i is zero on free columns and
// nonnegative on nonnegative columns, y_i <= 0 on >= rows, y_i >= 0 on <=
// rows, and sum_i y_i b_i < 0.
struct InequalityRay {
  std::vector<Rational> y;
};

std::variant<InequalityPoint, InequalityRay> solve_inequalities(const InequalitySystem& system);

}  // namespace sg
