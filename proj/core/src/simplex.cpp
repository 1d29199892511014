#include "sg/simplex.hpp"

#include "sg/errors.hpp"

namespace sg {
namespace {

class Tableau {
 public:
  // Columns: [0, cols) structural, [cols, cols + rows) artificial, last = rhs.
  explicit Tableau(const EqualitySystem& s)
      : m_(s.rows), n_(s.cols), width_(s.cols + s.rows + 1),
        t_(m_ * width_), cost_(width_), basis_(m_), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = sgn(s.b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(s.at(i, j)) != 0) cell(i, j) = sign_[i] < 0 ? Rational(-s.at(i, j)) : s.at(i, j);
      }
      cell(i, n_ + i) = 1;
      cell(i, rhs()) = sign_[i] < 0 ? Rational(-s.b[i]) : s.b[i];
      basis_[i] = n_ + i;
    }
    // Reduced costs of the phase-I objective (sum of artificials).
    for (std::size_t j = 0; j < width_; ++j) {
      if (j >= n_ && j < n_ + m_) continue;
      Rational acc = 0;
      for (std::size_t i = 0; i < m_; ++i) acc -= cell(i, j);
      cost_[j] = acc;
    }
  }

  std::size_t run() {
    std::size_t pivots = 0;
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return pivots;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& p = cell(i, enter);
        if (sgn(p) <= 0) continue;
        Rational ratio = cell(i, rhs()) / p;
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) {
        // The phase-I objective is bounded below by zero.
        throw InternalError("unbounded phase-I direction");
      }
      pivot(leave, enter);
      ++pivots;
    }
  }

  bool feasible() const { return sgn(cost_[rhs()]) == 0; }

  std::vector<Rational> point() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = cell(i, rhs());
    }
    return x;
  }

  // y = -pi, pi_i = 1 - (reduced cost of artificial i), mapped back through
  // the row sign flips.
  std::vector<Rational> ray() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational pi = 1 - cost_[n_ + i];
      y[i] = sign_[i] < 0 ? pi : Rational(-pi);
    }
    return y;
  }

 private:
  Rational& cell(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  const Rational& cell(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = cell(r, c);
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(cell(r, j)) != 0) cell(r, j) /= p;
    }
    Rational f;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(cell(i, c)) == 0) continue;
      f = cell(i, c);
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(cell(r, j)) != 0) cell(i, j) -= f * cell(r, j);
      }
    }
    if (sgn(cost_[c]) != 0) {
      f = cost_[c];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(cell(r, j)) != 0) cost_[j] -= f * cell(r, j);
      }
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> t_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

void check_point(const EqualitySystem& s, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (sgn(v) < 0) throw InternalError("simplex returned a negative coordinate");
  }
  for (std::size_t i = 0; i < s.rows; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < s.cols; ++j) acc += s.at(i, j) * x[j];
    if (acc != s.b[i]) throw InternalError("simplex point violates row " + std::to_string(i));
  }
}

void check_ray(const EqualitySystem& s, const std::vector<Rational>& y) {
  Rational yb = 0;
  for (std::size_t i = 0; i < s.rows; ++i) yb += y[i] * s.b[i];
  if (sgn(yb) >= 0) throw InternalError("Farkas ray has y.b >= 0");
  for (std::size_t j = 0; j < s.cols; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < s.rows; ++i) acc += y[i] * s.at(i, j);
    if (sgn(acc) < 0) throw InternalError("Farkas ray negative on column " + std::to_string(j));
  }
}

}  // namespace

FeasibilityResult solve_feasibility(const EqualitySystem& system, SimplexStats* stats) {
  if (system.a.size() != system.rows * system.cols || system.b.size() != system.rows) {
    throw InvalidArgument("equality system dimensions are inconsistent");
  }
  Tableau tableau(system);
  const std::size_t pivots = tableau.run();
  if (stats != nullptr) stats->pivots = pivots;
  if (tableau.feasible()) {
    FeasiblePoint p{tableau.point()};
    check_point(system, p.x);
    return p;
  }
  FarkasRay r{tableau.ray()};
  check_ray(system, r.y);
  return r;
}

std::variant<InequalityPoint, InequalityRay> solve_inequalities(const InequalitySystem& sys) {
  const std::size_t m = sys.rows.size();
  const std::size_t n = sys.vars;
  auto is_free = [&](std::size_t j) { return !sys.free_var.empty() && sys.free_var[j]; };
  // Column layout: one per variable, an extra negative copy per free
  // variable, one slack per inequality row.
  std::vector<std::size_t> neg_col(n, 0);
  std::size_t cols = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_free(j)) neg_col[j] = cols++;
  }
  std::vector<std::size_t> slack_col(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (sys.rows[i].sense != Sense::equal) slack_col[i] = cols++;
  }
  EqualitySystem eq(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = sys.rows[i];
    if (row.coeffs.size() != n) throw InvalidArgument("inequality row has the wrong width");
    for (std::size_t j = 0; j < n; ++j) {
      eq.at(i, j) = row.coeffs[j];
      if (is_free(j)) eq.at(i, neg_col[j]) = -row.coeffs[j];
    }
    if (row.sense == Sense::greater_equal) eq.at(i, slack_col[i]) = -1;
    if (row.sense == Sense::less_equal) eq.at(i, slack_col[i]) = 1;
    eq.b[i] = row.rhs;
  }
  auto result = solve_feasibility(eq);
  if (auto* p = std::get_if<FeasiblePoint>(&result)) {
    InequalityPoint out{std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
      out.x[j] = p->x[j];
      if (is_free(j)) out.x[j] -= p->x[neg_col[j]];
    }
    return out;
  }
  return InequalityRay{std::get<FarkasRay>(result).y};
}

}  // namespace sg
