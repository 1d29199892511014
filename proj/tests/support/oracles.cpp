#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "sg/enumeration.hpp"
#include "sg/simplex.hpp"

namespace sgtest {

using sg::PlayerSet;
using sg::Rational;
using sg::SimpleGame;

std::string data_path(const std::string& relative) {
  return std::string(SG_DATA_DIR) + "/" + relative;
}

std::vector<SimpleGame> brute_force_games(int n) {
  if (n > 4) throw std::invalid_argument("brute_force_games: n <= 4");
  const std::uint32_t subsets = 1u << n;
  std::vector<SimpleGame> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    auto in = [&](std::uint32_t s) { return ((family >> s) & 1u) != 0; };
    if (family == 0 || in(0)) continue;
    bool monotone = true;
    for (std::uint32_t s = 0; s < subsets && monotone; ++s)
      for (int p = 0; p < n && monotone; ++p)
        if (in(s) && !in(s | (1u << p))) monotone = false;
    if (!monotone) continue;
    std::vector<PlayerSet> winning;
    for (std::uint32_t s = 0; s < subsets; ++s)
      if (in(s)) winning.push_back(PlayerSet::from_mask(s));
    out.push_back(SimpleGame::from_winning_family(n, winning));
  }
  return out;
}

namespace {

template <class Pred>
bool all_pairs(const SimpleGame& g, Pred pred) {
  const std::uint32_t subsets = 1u << g.players();
  for (std::uint32_t x = 0; x < subsets; ++x)
    for (std::uint32_t y = 0; y < subsets; ++y)
      if (!pred(PlayerSet::from_mask(x), PlayerSet::from_mask(y))) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> winning_losing_pairs(const SimpleGame& g) {
  const std::uint32_t subsets = 1u << g.players();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t x = 0; x < subsets; ++x) {
    if (!g.is_winning(PlayerSet::from_mask(x))) continue;
    for (std::uint32_t y = 0; y < subsets; ++y)
      if (!g.is_winning(PlayerSet::from_mask(y))) pairs.emplace_back(x, y);
  }
  return pairs;
}

// Rows w(X) - w(Y) >= margin, w >= 0, plus sum w >= 1 when asked.
void pair_system(const SimpleGame& g, int margin, bool nonzero,
                 std::vector<std::vector<Rational>>& a, std::vector<Rational>& b) {
  const int n = g.players();
  for (auto [x, y] : winning_losing_pairs(g)) {
    std::vector<Rational> row(n);
    for (int p = 0; p < n; ++p) row[p] = int((x >> p) & 1u) - int((y >> p) & 1u);
    a.push_back(row);
    b.emplace_back(margin);
  }
  for (int p = 0; p < n; ++p) {
    std::vector<Rational> row(n);
    row[p] = 1;
    a.push_back(row);
    b.emplace_back(0);
  }
  if (nonzero) {
    a.emplace_back(n, Rational(1));
    b.emplace_back(1);
  }
}

}  // namespace

bool brute_proper(const SimpleGame& g) {
  return all_pairs(g, [&](PlayerSet x, PlayerSet y) {
    return !(g.is_winning(x) && g.is_winning(y) && !x.intersects(y));
  });
}

bool brute_strong(const SimpleGame& g) {
  const int n = g.players();
  return all_pairs(g, [&](PlayerSet x, PlayerSet y) {
    if (y != x.complement(n)) return true;
    return g.is_winning(x) || g.is_winning(y);
  });
}

bool fm_feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  if (a.empty()) return true;
  const std::size_t vars = a.front().size();
  for (std::size_t k = 0; k < vars; ++k) {
    std::vector<std::size_t> pos, neg;
    std::map<std::vector<Rational>, Rational> next;
    auto keep = [&](std::vector<Rational> row, Rational rhs) {
      Rational scale = 0;
      for (const auto& c : row)
        if (c != 0) {
          scale = abs(c);
          break;
        }
      if (scale == 0) {
        if (rhs > 0) throw std::logic_error("infeasible");
        return;
      }
      for (auto& c : row) c /= scale;
      rhs /= scale;
      auto [it, fresh] = next.emplace(std::move(row), rhs);
      if (!fresh && it->second < rhs) it->second = rhs;
    };
    try {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][k] > 0) pos.push_back(i);
        else if (a[i][k] < 0) neg.push_back(i);
        else keep(a[i], b[i]);
      }
      for (auto i : pos)
        for (auto j : neg) {
          Rational ci = a[i][k], cj = -a[j][k];
          std::vector<Rational> row(vars);
          for (std::size_t t = 0; t < vars; ++t) row[t] = a[i][t] / ci + a[j][t] / cj;
          row[k] = 0;
          keep(std::move(row), b[i] / ci + b[j] / cj);
        }
    } catch (const std::logic_error&) {
      return false;
    }
    a.clear();
    b.clear();
    for (auto& [row, rhs] : next) {
      a.push_back(row);
      b.push_back(rhs);
    }
  }
  return true;
}

bool fm_weighted(const SimpleGame& g) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  pair_system(g, 1, false, a, b);
  return fm_feasible(std::move(a), std::move(b));
}

bool fm_rough(const SimpleGame& g) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  pair_system(g, 0, true, a, b);
  return fm_feasible(std::move(a), std::move(b));
}

namespace {

bool pair_lp(const SimpleGame& g, int margin, bool nonzero) {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  pair_system(g, margin, nonzero, a, b);
  sg::InequalitySystem sys;
  sys.vars = static_cast<std::size_t>(g.players());
  for (std::size_t i = 0; i < a.size(); ++i)
    sys.rows.push_back({a[i], sg::Sense::greater_equal, b[i]});
  return std::holds_alternative<sg::InequalityPoint>(sg::solve_inequalities(sys));
}

}  // namespace

bool pair_lp_weighted(const SimpleGame& g) { return pair_lp(g, 1, false); }
bool pair_lp_rough(const SimpleGame& g) { return pair_lp(g, 0, true); }

std::optional<std::uint64_t> shortest_certificate(const SimpleGame& g, bool potent,
                                                  std::uint64_t max_len) {
  const int n = g.players();
  if (n > 8) throw std::invalid_argument("shortest_certificate: n <= 8");
  using Sum = std::array<int, 8>;
  auto pack = [&](const Sum& s) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key = key << 8 | static_cast<std::uint8_t>(s[i] + 64);
    return key;
  };

  std::vector<Sum> alphabet;
  {
    std::unordered_set<std::uint64_t> seen;
    for (auto [x, y] : winning_losing_pairs(g)) {
      Sum v{};
      for (int p = 0; p < n; ++p) v[p] = int((x >> p) & 1u) - int((y >> p) & 1u);
      if (seen.insert(pack(v)).second) alphabet.push_back(v);
    }
  }
  const int target = potent ? -1 : 0;
  if (potent && max_len < 2) return std::nullopt;
  const std::uint64_t steps = potent ? max_len - 1 : max_len;

  std::vector<Sum> layer{Sum{}};
  for (std::uint64_t j = 1; j <= steps; ++j) {
    const int room = static_cast<int>(steps - j);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Sum> next;
    for (const auto& s : layer)
      for (const auto& v : alphabet) {
        Sum t{};
        bool ok = true;
        bool hit = true;
        for (int i = 0; i < n && ok; ++i) {
          t[i] = s[i] + v[i];
          if (std::abs(t[i] - target) > room) ok = false;
          if (t[i] != target) hit = false;
        }
        if (!ok) continue;
        if (hit) return potent ? j + 1 : j;
        if (seen.insert(pack(t)).second) next.push_back(t);
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

std::vector<SimpleGame> all_games(int n) {
  std::vector<SimpleGame> out;
  sg::for_each_game(n, {}, [&](const SimpleGame& g) { out.push_back(g); });
  return out;
}

std::vector<SimpleGame> sample_games(int n, std::size_t count, std::uint64_t seed) {
  sg::Rng rng(seed);
  std::vector<SimpleGame> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sg::random_game(n, rng));
  return out;
}

}  // namespace sgtest
