#include "sg/fishburn.hpp"

#include <algorithm>
#include <numeric>

#include "sg/errors.hpp"
#include "sg/rational.hpp"

namespace sg {
namespace {

std::int64_t dot(const TernaryVector& v, std::span<const std::int64_t> w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += v[i] * w[i];
  return s;
}

bool sums_to_zero(std::span<const TernaryVector> vs) {
  if (vs.empty()) return true;
  std::vector<int> acc(vs.front().dimension(), 0);
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  return std::all_of(acc.begin(), acc.end(), [](int x) { return x == 0; });
}

bool proper_subsets_independent(std::span<const TernaryVector> vs) {
  // Every proper subset is independent iff every (k-1)-subset is.
  const std::size_t k = vs.size();
  if (k <= 1) return true;
  for (std::size_t skip = 0; skip < k; ++skip) {
    std::vector<TernaryVector> rest;
    for (std::size_t i = 0; i < k; ++i) {
      if (i != skip) rest.push_back(vs[i]);
    }
    if (rank_of(rest) != k - 1) return false;
  }
  return true;
}

}  // namespace

std::vector<TernaryVector> find_relations(std::span<const std::int64_t> w) {
  const int n = static_cast<int>(w.size());
  if (n < 1 || n > 12) throw InvalidArgument("find_relations supports 1..12 weights");
  for (auto x : w) {
    if (x <= 0) throw InvalidArgument("weights must be positive");
  }
  std::vector<TernaryVector> out;
  std::vector<int> coords(static_cast<std::size_t>(n), -1);
  // Odometer over {-1,0,1}^n.
  while (true) {
    auto first = std::find_if(coords.begin(), coords.end(), [](int c) { return c != 0; });
    if (first != coords.end() && *first == 1) {
      TernaryVector v(coords);
      if (dot(v, w) == 0) out.push_back(std::move(v));
    }
    std::size_t i = 0;
    while (i < coords.size() && coords[i] == 1) coords[i++] = -1;
    if (i == coords.size()) break;
    ++coords[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t rank_of(std::span<const TernaryVector> vectors) {
  if (vectors.empty()) return 0;
  const auto cols = static_cast<std::size_t>(vectors.front().dimension());
  std::vector<std::vector<Rational>> m;
  for (const auto& v : vectors) {
    if (static_cast<std::size_t>(v.dimension()) != cols) throw InvalidArgument("vectors differ in dimension");
    std::vector<Rational> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = v[j];
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::optional<FishburnSystem> fishburn_system(std::span<const std::int64_t> w, int k) {
  if (k < 1) return std::nullopt;
  auto rel = find_relations(w);
  if (rel.size() != static_cast<std::size_t>(k)) return std::nullopt;
  if (!proper_subsets_independent(rel)) return std::nullopt;
  // Sign choices with the first relation fixed.
  const std::uint32_t choices = std::uint32_t{1} << (k - 1);
  for (std::uint32_t s = 0; s < choices; ++s) {
    std::vector<TernaryVector> signed_rel;
    for (int i = 0; i < k; ++i) {
      const bool flip = i > 0 && ((s >> (i - 1)) & 1u);
      signed_rel.push_back(flip ? rel[static_cast<std::size_t>(i)].negated() : rel[static_cast<std::size_t>(i)]);
    }
    if (sums_to_zero(signed_rel)) {
      return FishburnSystem{WeightVector{std::vector<std::int64_t>(w.begin(), w.end()), signed_rel}, k};
    }
  }
  return std::nullopt;
}

bool check_fishburn(std::span<const std::int64_t> w, int k) { return fishburn_system(w, k).has_value(); }

bool is_fishburn_system(const FishburnSystem& f) {
  const auto& rel = f.weight_vector.relations;
  if (f.k < 1 || rel.size() != static_cast<std::size_t>(f.k)) return false;
  const auto all = find_relations(f.weight_vector.weights);
  if (all.size() != rel.size()) return false;
  for (const auto& v : rel) {
    if (static_cast<std::size_t>(v.dimension()) != f.weight_vector.weights.size() || v.is_zero()) return false;
    if (dot(v, f.weight_vector.weights) != 0) return false;
    const bool listed = std::find(all.begin(), all.end(), v) != all.end() ||
                        std::find(all.begin(), all.end(), v.negated()) != all.end();
    if (!listed) return false;
  }
  // Distinct up to sign.
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      if (rel[i] == rel[j] || rel[i] == rel[j].negated()) return false;
    }
  }
  return sums_to_zero(rel) && proper_subsets_independent(rel);
}

DoublingGame doubling_game(const FishburnSystem& f, const DoublingOptions& options) {
  if (!is_fishburn_system(f)) throw InvalidArgument("not a Fishburn system");
  const auto& w = f.weight_vector.weights;
  const int n = static_cast<int>(w.size());
  const int k = f.k;
  if (n <= 2) throw InvalidArgument("doubling needs n > 2");
  if (n + k > kMaxSweepPlayers) throw InvalidArgument("doubling game would exceed 20 players");
  const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
  const std::int64_t big = options.threshold.value_or(2 * total + 1);
  if (big <= 2 * total) throw InvalidArgument("threshold must exceed 2 w(P) = " + std::to_string(2 * total));

  DoublingGame out{SimpleGame(1, {PlayerSet::of({1})}), w, big, {}, {}};
  for (int i = 0; i < k; ++i) {
    const auto& v = f.weight_vector.relations[static_cast<std::size_t>(i)];
    PlayerSet x = positive_part(v);
    PlayerSet y = negative_part(v);
    std::int64_t s = 0;
    for (int p : x.members()) s += w[static_cast<std::size_t>(p - 1)];
    out.weights.push_back(big - s);
    x = x.with(n + i + 1);
    y = y.with(n + i + 1);
    if (options.swap_sides) std::swap(x, y);
    out.on_threshold_winning.push_back(x);
    out.on_threshold_losing.push_back(y);
  }
  const int m = n + k;
  const std::uint32_t size = std::uint32_t{1} << m;
  std::vector<std::int64_t> weight(size, 0);
  std::vector<std::uint8_t> win(size, 0);
  std::vector<PlayerSet> on_threshold;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    weight[mask] = weight[mask & (mask - 1)] + out.weights[static_cast<std::size_t>(std::countr_zero(mask))];
    if (weight[mask] == big) on_threshold.push_back(PlayerSet::from_mask(mask));
    const auto& tw = out.on_threshold_winning;
    win[mask] = weight[mask] > big ||
                (weight[mask] == big &&
                 std::find(tw.begin(), tw.end(), PlayerSet::from_mask(mask)) != tw.end());
  }
  std::vector<PlayerSet> expected = out.on_threshold_winning;
  expected.insert(expected.end(), out.on_threshold_losing.begin(), out.on_threshold_losing.end());
  std::sort(expected.begin(), expected.end());
  if (on_threshold != expected) {
    throw InternalError("doubling threshold " + std::to_string(big) + " is hit by " +
                        std::to_string(on_threshold.size()) + " coalitions, expected " +
                        std::to_string(expected.size()));
  }
  std::vector<PlayerSet> mw;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    if (!win[mask]) continue;
    bool minimal = true;
    for (std::uint32_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      if (win[mask & ~(rest & (~rest + 1))]) minimal = false;
    }
    if (minimal) mw.push_back(PlayerSet::from_mask(mask));
  }
  out.game = SimpleGame(m, mw);
  return out;
}

}  // namespace sg
