#include "sg/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "sg/errors.hpp"

namespace sg {
namespace {

PlayerSet rotate(PlayerSet s, int n, int by) {
  PlayerSet out;
  for (int p : s.members()) out = out.with((p - 1 + by) % n + 1);
  return out;
}

void all_subsets_of_size(int n, int k, const std::function<void(PlayerSet)>& f) {
  if (k < 0 || k > n) return;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  while (m < limit) {
    f(PlayerSet::from_mask(static_cast<std::uint32_t>(m)));
    if (m == 0) break;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace

SimpleGame fano() {
  return SimpleGame(7, {PlayerSet::of({1, 2, 3}), PlayerSet::of({3, 4, 5}), PlayerSet::of({1, 5, 6}),
                        PlayerSet::of({1, 4, 7}), PlayerSet::of({2, 5, 7}), PlayerSet::of({3, 6, 7}),
                        PlayerSet::of({2, 4, 6})});
}

SimpleGame hadamard_game(int k) {
  if (k < 3 || k > 4) throw InvalidArgument("hadamard_game needs k in 3..4, got " + std::to_string(k));
  const int order = 1 << k;
  // Sylvester: H[i][j] = (-1)^popcount(i & j).
  std::vector<PlayerSet> rows;
  for (int i = 1; i < order; ++i) {
    PlayerSet row;
    for (int j = 1; j < order; ++j) {
      if (std::popcount(static_cast<unsigned>(i & j)) % 2 == 0) row = row.with(j);
    }
    rows.push_back(row);
  }
  return SimpleGame::from_winning_family(order - 1, rows);
}

SimpleGame cyclic_game(PlayerSet pattern, int n) {
  if (n < 1 || n > kMaxPlayers) throw InvalidArgument("cyclic_game needs 1 <= n <= 32");
  if (pattern.empty()) throw InvalidArgument("cyclic_game needs a nonempty pattern");
  if (!pattern.subset_of(PlayerSet::grand(n))) throw InvalidArgument("pattern has players outside 1..n");
  std::vector<PlayerSet> shifts;
  for (int t = 0; t < n; ++t) shifts.push_back(rotate(pattern, n, t));
  return SimpleGame::from_winning_family(n, shifts);
}

std::vector<int> least_difference_set(int q) {
  if (q != 2 && q != 3 && q != 5) throw InvalidArgument("projective_game supports q in {2, 3, 5}");
  const int v = q * q + q + 1;
  const int size = q + 1;
  // Lexicographic search; every nonzero difference must occur exactly once.
  std::vector<int> d;
  std::vector<int> seen(static_cast<std::size_t>(v), 0);
  std::function<bool(int)> extend = [&](int from) {
    if (static_cast<int>(d.size()) == size) return true;
    for (int x = from; x < v; ++x) {
      bool ok = true;
      std::vector<int> added;
      for (int y : d) {
        for (int diff : {(x - y + v) % v, (y - x + v) % v}) {
          if (seen[static_cast<std::size_t>(diff)]) ok = false;
          seen[static_cast<std::size_t>(diff)]++;
          added.push_back(diff);
        }
      }
      if (ok) {
        d.push_back(x);
        if (extend(x + 1)) return true;
        d.pop_back();
      }
      for (int diff : added) seen[static_cast<std::size_t>(diff)]--;
    }
    return false;
  };
  if (!extend(0)) throw InternalError("no perfect difference set modulo " + std::to_string(v));
  return d;
}

SimpleGame projective_game(int q) {
  const auto d = least_difference_set(q);
  const int v = q * q + q + 1;
  std::vector<PlayerSet> lines;
  for (int t = 0; t < v; ++t) {
    PlayerSet line;
    for (int x : d) line = line.with((x + t) % v + 1);
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  return SimpleGame(v, lines);
}

SimpleGame gn2_game(int n) {
  if (n < 5 || n > 20) throw InvalidArgument("gn2_game needs 5 <= n <= 20");
  const PlayerSet a = PlayerSet::of({1, 2});
  const PlayerSet b = PlayerSet::of({3, 4, 5});
  std::vector<PlayerSet> mw{a, b};
  all_subsets_of_size(n, 4, [&](PlayerSet s) {
    if (!a.subset_of(s) && !b.subset_of(s)) mw.push_back(s);
  });
  return SimpleGame(n, mw);
}

SimpleGame example2_game() {
  std::vector<PlayerSet> family{
      PlayerSet::of({1, 2, 4}), PlayerSet::of({1, 3, 6}), PlayerSet::of({2, 3, 5}),
      PlayerSet::of({1, 4, 5}), PlayerSet::of({2, 5, 6}), PlayerSet::of({3, 4, 6}),
      // Complements of 123, 126, 135, 156.
      PlayerSet::of({4, 5, 6}), PlayerSet::of({3, 4, 5}), PlayerSet::of({2, 4, 6}), PlayerSet::of({2, 3, 4})};
  all_subsets_of_size(6, 4, [&](PlayerSet s) { family.push_back(s); });
  return SimpleGame::from_winning_family(6, family);
}

SimpleGame example_proper6_game() {
  return SimpleGame(6, {PlayerSet::of({1, 2, 3}), PlayerSet::of({3, 4, 5}), PlayerSet::of({1, 5, 6}),
                        PlayerSet::of({2, 4, 6}), PlayerSet::of({1, 2, 6})});
}

SimpleGame un_security_council() {
  std::vector<Rational> w(15, Rational(1));
  for (int i = 0; i < 5; ++i) w[static_cast<std::size_t>(i)] = 7;
  return threshold_game(w, Rational(39));
}

SimpleGame threshold_game(std::span<const Rational> weights, const Rational& quota) {
  const int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxSweepPlayers) throw InvalidArgument("threshold_game needs 1..20 weights");
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw InvalidArgument("negative weight " + to_string(w));
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<Rational> total(size);
  std::vector<PlayerSet> mw;
  for (std::uint32_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(m);
    total[m] = total[m & (m - 1)] + weights[static_cast<std::size_t>(low)];
  }
  if (sgn(quota) <= 0) throw InvalidArgument("quota must be positive");
  for (std::uint32_t m = 1; m < size; ++m) {
    if (total[m] < quota) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0 && minimal; rest &= rest - 1) {
      const std::uint32_t sub = m & ~(rest & -rest);
      if (total[sub] >= quota) minimal = false;
    }
    if (minimal) mw.push_back(PlayerSet::from_mask(m));
  }
  if (mw.empty()) throw InvalidArgument("quota exceeds the total weight");
  return SimpleGame(n, mw);
}

SimpleGame relabel(const SimpleGame& g, std::span<const int> perm) {
  const int n = g.players();
  if (perm.size() != static_cast<std::size_t>(n)) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 1 || p > n || hit[static_cast<std::size_t>(p - 1)]) throw InvalidArgument("not a permutation");
    hit[static_cast<std::size_t>(p - 1)] = true;
  }
  std::vector<PlayerSet> mw;
  for (PlayerSet x : g.min_winning()) {
    PlayerSet y;
    for (int p : x.members()) y = y.with(perm[static_cast<std::size_t>(p - 1)]);
    mw.push_back(y);
  }
  std::sort(mw.begin(), mw.end());
  return SimpleGame(n, mw);
}

std::optional<std::vector<int>> find_isomorphism(const SimpleGame& g, const SimpleGame& h) {
  const int n = g.players();
  if (n != h.players() || g.min_winning().size() != h.min_winning().size()) return std::nullopt;
  // Player signature: sorted sizes of the minimal winning coalitions holding it.
  auto signatures = [n](const SimpleGame& x) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (PlayerSet m : x.min_winning()) {
      for (int p : m.members()) sig[static_cast<std::size_t>(p - 1)].push_back(m.size());
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  const auto sg_ = signatures(g);
  const auto sh = signatures(h);
  {
    auto a = sg_;
    auto b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::uint32_t> target;
  for (PlayerSet m : h.min_winning()) target.push_back(m.mask());
  std::sort(target.begin(), target.end());

  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  std::uint32_t used = 0;
  std::uint32_t assigned = 0;
  // Coalitions of g become checkable once all their members are mapped.
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 1; j <= n; ++j) {
      if ((used >> (j - 1)) & 1u) continue;
      if (sg_[static_cast<std::size_t>(i)] != sh[static_cast<std::size_t>(j - 1)]) continue;
      perm[static_cast<std::size_t>(i)] = j;
      used |= 1u << (j - 1);
      assigned |= 1u << i;
      bool ok = true;
      for (PlayerSet m : g.min_winning()) {
        if (!m.contains(i + 1) || (m.mask() & ~assigned) != 0) continue;
        std::uint32_t img = 0;
        for (int p : m.members()) img |= 1u << (perm[static_cast<std::size_t>(p - 1)] - 1);
        if (!std::binary_search(target.begin(), target.end(), img)) {
          ok = false;
          break;
        }
      }
      if (ok && place(i + 1)) return true;
      used &= ~(1u << (j - 1));
      assigned &= ~(1u << i);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return perm;
}

bool is_isomorphic(const SimpleGame& g, const SimpleGame& h) { return find_isomorphism(g, h).has_value(); }

std::optional<PlayerSet> find_cyclic_generator(const SimpleGame& g) {
  const int n = g.players();
  std::vector<int> sizes;
  for (PlayerSet m : g.min_winning()) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes.size() != 1 || n > 20) return std::nullopt;
  std::optional<PlayerSet> found;
  all_subsets_of_size(n - 1, sizes.front() - 1, [&](PlayerSet rest) {
    if (found) return;
    PlayerSet pattern = PlayerSet::from_mask(1u | (rest.mask() << 1));
    if (is_isomorphic(cyclic_game(pattern, n), g)) found = pattern;
  });
  return found;
}

}  // namespace sg
