#include "sg/search.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sg/bounds.hpp"
#include "sg/errors.hpp"
#include "sg/weightedness.hpp"

namespace sg {
namespace {

// Per-player occurrence counts, one byte each.
struct Counts {
  std::array<std::uint8_t, kMaxSearchPlayers> c{};

  friend bool operator==(const Counts&, const Counts&) = default;
  friend auto operator<=>(const Counts&, const Counts&) = default;
};

struct CountsHash {
  std::size_t operator()(const Counts& v) const {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::memcpy(&lo, v.c.data(), 8);
    std::memcpy(&hi, v.c.data() + 8, 8);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ull));
  }
};

struct MemoKey {
  Counts counts;
  std::uint64_t slots;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const { return CountsHash{}(k.counts) ^ (k.slots * 0xff51afd7ed558ccdull); }
};

class BudgetExceeded {};

// Writes a count vector as a sum of losing coalitions.
//
// Winners are fixed to minimal winning coalitions: if a winner X strictly
// contains a minimal winning M, each player of X - M also occurs in some loser
// (the counts balance), and dropping it from both sides keeps X - {a} winning
// and the loser losing, so the length is unchanged. On the loser side only
// coalitions of the form M cap supp(c) with M maximal losing are tried: if a
// solution uses Y and Y + {q} is still losing, q sits in another loser Z, and
// moving it from Z to Y gives another solution.
class Decomposer {
 public:
  Decomposer(const SimpleGame& game, std::uint64_t* nodes, std::uint64_t budget)
      : n_(game.players()), max_losing_(maximal_losing(game)), nodes_(nodes), budget_(budget) {
    for (PlayerSet y : max_losing_) max_lose_size_ = std::max<std::uint64_t>(max_lose_size_, y.size());
    const WinningTable table(game);
    losing_.resize(table.size());
    for (std::uint32_t m = 0; m < table.size(); ++m) losing_[m] = !table.winning(m);
  }

  std::uint64_t max_lose_size() const { return max_lose_size_; }

  // Fills `out` with at most `slots` nonempty losers summing to c.
  bool run(const Counts& c, std::uint64_t slots, std::vector<PlayerSet>& out) {
    if (++*nodes_ > budget_) throw BudgetExceeded{};
    std::uint64_t total = 0;
    std::uint64_t top = 0;
    std::uint32_t supp = 0;
    std::uint32_t forced = 0;
    for (int i = 0; i < n_; ++i) {
      total += c.c[static_cast<std::size_t>(i)];
      top = std::max<std::uint64_t>(top, c.c[static_cast<std::size_t>(i)]);
      if (c.c[static_cast<std::size_t>(i)] > 0) supp |= 1u << i;
    }
    if (total == 0) return true;
    if (slots == 0 || top > slots || total > slots * max_lose_size_) return false;
    for (int i = 0; i < n_; ++i) {
      if (c.c[static_cast<std::size_t>(i)] == slots) forced |= 1u << i;
    }
    if (!losing_[forced]) return false;
    const MemoKey key{c, slots};
    if (failed_.contains(key)) return false;

    const int p = std::countr_zero(supp);
    std::vector<std::uint32_t> cand;
    for (PlayerSet m : max_losing_) {
      if (((m.mask() >> p) & 1u) == 0 || (m.mask() & forced) != forced) continue;
      cand.push_back(m.mask() & supp);
    }
    std::sort(cand.begin(), cand.end(), std::greater<>());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const bool dominated = std::any_of(cand.begin(), cand.end(), [&](std::uint32_t other) {
        return other != cand[i] && (cand[i] & ~other) == 0;
      });
      if (dominated) continue;
      Counts next = c;
      for (int j = 0; j < n_; ++j) {
        if ((cand[i] >> j) & 1u) --next.c[static_cast<std::size_t>(j)];
      }
      if (run(next, slots - 1, out)) {
        out.push_back(PlayerSet::from_mask(cand[i]));
        return true;
      }
    }
    failed_.insert(key);
    return false;
  }

 private:
  int n_;
  std::vector<PlayerSet> max_losing_;
  std::vector<bool> losing_;
  std::uint64_t max_lose_size_ = 0;
  std::uint64_t* nodes_;
  std::uint64_t budget_;
  std::unordered_set<MemoKey, MemoHash> failed_;
};

struct LevelEntry {
  Counts sum;
  std::uint32_t pred;
  std::uint32_t winner;
};

// Breadth-first over distinct sums of minimal winning coalitions. Level j
// holds the sums of j winners (plus the all-ones vector when potent); each is
// tested for a decomposition into j losers.
LengthResult shortest(const SimpleGame& game, const SearchLimits& limits, bool potent,
                      std::uint64_t start_length) {
  const int n = game.players();
  const std::uint64_t extra = potent ? 1 : 0;
  LengthResult res;
  res.lower_bound = start_length;
  if (n > std::min(limits.max_players, kMaxSearchPlayers) || limits.max_length > 255) {
    res.exact = false;
    return res;
  }
  const auto& winners = game.min_winning();
  std::uint64_t min_win_size = static_cast<std::uint64_t>(n);
  for (PlayerSet w : winners) min_win_size = std::min<std::uint64_t>(min_win_size, w.size());

  Decomposer dec(game, &res.nodes, limits.node_budget);
  const std::uint64_t max_lose = dec.max_lose_size();
  // j counts winners besides P; the certificate has j + extra coalitions per side.
  const std::uint64_t j_max = limits.max_length - extra;
  const std::uint64_t j_start = start_length > extra ? start_length - extra : 1;

  std::vector<std::vector<LevelEntry>> levels(1);
  Counts seed;
  for (int i = 0; i < n; ++i) seed.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(extra);
  levels[0].push_back({seed, 0, 0});

  try {
    for (std::uint64_t j = 1; j <= j_max; ++j) {
      std::unordered_map<Counts, std::size_t, CountsHash> index;
      std::vector<LevelEntry> next;
      const auto& prev = levels.back();
      for (std::uint32_t pi = 0; pi < prev.size(); ++pi) {
        for (std::uint32_t wi = 0; wi < winners.size(); ++wi) {
          Counts s = prev[pi].sum;
          std::uint64_t total = 0;
          bool too_big = false;
          for (int i = 0; i < n; ++i) {
            auto& ci = s.c[static_cast<std::size_t>(i)];
            if (winners[wi].contains(i + 1)) ++ci;
            // Coordinate i needs a loser per unit; only j_max are available.
            if (ci > j_max) too_big = true;
            total += ci;
          }
          if (too_big) continue;
          // The losers must carry the whole sum at some final level J in
          // [j, j_max]; later winners add at least min_win_size each. The
          // condition is linear in J, so checking the ends suffices.
          if (total > j * max_lose && total + (j_max - j) * min_win_size > j_max * max_lose) continue;
          if (index.try_emplace(s, next.size()).second) {
            next.push_back({s, pi, wi});
            if (++res.nodes > limits.node_budget) throw BudgetExceeded{};
          }
        }
      }
      std::sort(next.begin(), next.end(),
                [](const LevelEntry& a, const LevelEntry& b) { return a.sum < b.sum; });
      levels.push_back(std::move(next));
      if (levels.back().empty()) break;
      if (j < j_start) continue;
      for (std::uint32_t k = 0; k < levels.back().size(); ++k) {
        const LevelEntry& e = levels.back()[k];
        std::vector<PlayerSet> losers;
        if (!dec.run(e.sum, j, losers)) continue;
        Certificate cert;
        cert.potent = potent;
        std::uint32_t at = k;
        for (std::uint64_t lvl = j; lvl >= 1; --lvl) {
          const LevelEntry& cur = levels[lvl][at];
          cert.transform.winners.add(winners[cur.winner]);
          at = cur.pred;
        }
        for (PlayerSet y : losers) cert.transform.losers.add(y);
        cert.transform.losers.add(PlayerSet{}, j - losers.size());
        if (potent) {
          cert.transform.winners.add(game.grand());
          cert.transform.losers.add(PlayerSet{});
        }
        if (auto verdict = verify_certificate(game, cert); !verdict) {
          throw InternalError("search produced an invalid certificate: " + verdict.detail);
        }
        res.value = j + extra;
        res.lower_bound = j + extra;
        res.certificate = std::move(cert);
        return res;
      }
      res.lower_bound = j + extra + 1;
    }
  } catch (const BudgetExceeded&) {
    res.exact = false;
    return res;
  }
  res.exact = false;
  res.lower_bound = limits.max_length + 1;
  return res;
}

}  // namespace

LengthResult compute_f(const SimpleGame& game, const SearchLimits& limits) {
  if (limits.lp_shortcut && game.players() <= kMaxSweepPlayers &&
      std::holds_alternative<Representation>(check_weighted(game))) {
    return LengthResult{};
  }
  return shortest(game, limits, false, 2);
}

LengthResult compute_g(const SimpleGame& game, const SearchLimits& limits) {
  const auto lb = coord_sum_lower_bound_g(game);
  if (!lb) return LengthResult{};
  if (limits.lp_shortcut && game.players() <= kMaxSweepPlayers &&
      std::holds_alternative<Representation>(check_rough(game))) {
    return LengthResult{};
  }
  return shortest(game, limits, true, std::max<std::uint64_t>(*lb, 3));
}

bool is_k_trade_robust(const SimpleGame& game, std::uint64_t k, const SearchLimits& limits) {
  if (k == 0) throw InvalidArgument("k must be positive");
  if (k > 20) throw Inconclusive("k = " + std::to_string(k) + " exceeds the length cap 20");
  if (game.players() > std::min(limits.max_players, kMaxSearchPlayers)) {
    throw Inconclusive("n = " + std::to_string(game.players()) + " exceeds the search cap");
  }
  if (k == 1) return true;
  SearchLimits l = limits;
  l.max_length = k;
  l.lp_shortcut = false;
  const LengthResult r = shortest(game, l, false, 2);
  if (r.value) return false;
  if (r.lower_bound > k) return true;
  if (!r.exact) throw Inconclusive("node budget exhausted before length " + std::to_string(k));
  return true;
}

RobustnessReport analyze_robustness(const SimpleGame& game, const SearchLimits& limits) {
  RobustnessReport r;
  r.f = compute_f(game, limits);
  r.g = compute_g(game, limits);
  r.search_cap = limits.max_length;
  return r;
}

std::optional<ElSequence> find_el_violation(const SimpleGame& game, int max_degree) {
  const int n = game.players();
  if (n > 8) throw InvalidArgument("find_el_violation is limited to 8 players");
  if (max_degree < 1) return std::nullopt;
  const auto& winners = game.min_winning();
  // Minimal blocking coalitions are the complements of maximal losing ones.
  std::vector<PlayerSet> blockers;
  for (PlayerSet y : maximal_losing(game)) blockers.push_back(y.complement(n));
  std::sort(blockers.begin(), blockers.end());

  // Shrinking a winner to a minimal winner (or a blocker to a minimal one)
  // only lowers counts, so sums over the two antichains suffice.
  for (int k = 1; k <= max_degree; ++k) {
    const std::size_t base = static_cast<std::size_t>(k);
    auto encode = [&](const Counts& v) {
      std::size_t code = 0;
      for (int i = n - 1; i >= 0; --i) code = code * base + v.c[static_cast<std::size_t>(i)];
      return code;
    };
    auto sums = [&](const std::vector<PlayerSet>& alphabet) {
      // Multisets of size k as nondecreasing index sequences; keep sums with
      // every count below k.
      std::unordered_map<Counts, std::vector<PlayerSet>, CountsHash> out;
      std::vector<std::size_t> idx(base, 0);
      if (alphabet.empty()) return out;
      while (true) {
        Counts s;
        bool ok = true;
        for (std::size_t t : idx) {
          for (int p : alphabet[t].members()) {
            if (++s.c[static_cast<std::size_t>(p - 1)] >= k) ok = false;
          }
        }
        if (ok && !out.contains(s)) {
          std::vector<PlayerSet> seq;
          for (std::size_t t : idx) seq.push_back(alphabet[t]);
          out.emplace(s, std::move(seq));
        }
        std::size_t pos = base;
        while (pos > 0 && idx[pos - 1] == alphabet.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t q = pos; q < base; ++q) idx[q] = idx[pos - 1];
      }
      return out;
    };
    const auto win_sums = sums(winners);
    const auto block_sums = sums(blockers);
    if (win_sums.empty() || block_sums.empty()) continue;
    // For every point of the grid [0, k-1]^n, some blocker sum below it.
    std::size_t cells = 1;
    for (int i = 0; i < n; ++i) cells *= base;
    std::vector<const Counts*> below(cells, nullptr);
    for (const auto& [s, seq] : block_sums) {
      const std::size_t code = encode(s);
      if (!below[code] || s < *below[code]) below[code] = &s;
    }
    std::size_t stride = 1;
    for (int i = 0; i < n; ++i) {
      for (std::size_t code = 0; code < cells; ++code) {
        if ((code / stride) % base == 0) continue;
        const Counts* from = below[code - stride];
        if (from && (!below[code] || *from < *below[code])) below[code] = from;
      }
      stride *= base;
    }
    std::vector<Counts> ordered;
    for (const auto& [s, seq] : win_sums) ordered.push_back(s);
    std::sort(ordered.begin(), ordered.end());
    for (const Counts& s : ordered) {
      Counts room;
      for (int i = 0; i < n; ++i) {
        room.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k - 1 - s.c[static_cast<std::size_t>(i)]);
      }
      const Counts* b = below[encode(room)];
      if (!b) continue;
      ElSequence z;
      for (PlayerSet x : win_sums.at(s)) {
        z.coalitions.push_back(x);
        z.roles.push_back(ElRole::winning);
      }
      for (PlayerSet x : block_sums.at(*b)) {
        z.coalitions.push_back(x);
        z.roles.push_back(ElRole::blocking);
      }
      if (!violates_at_least_half(game, z)) throw InternalError("EL search produced a non-violating sequence");
      return z;
    }
  }
  return std::nullopt;
}

}  // namespace sg
