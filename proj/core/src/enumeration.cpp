#include "sg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "sg/errors.hpp"
#include "sg/game_io.hpp"
#include "sg/search.hpp"
#include "sg/constructions.hpp"
#include "sg/weightedness.hpp"

namespace sg {
namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t bound) { return rng() % bound; }

SimpleGame game_from_table(int n, const std::vector<std::uint8_t>& win) {
  std::vector<PlayerSet> mw;
  for (std::uint32_t m = 1; m < win.size(); ++m) {
    if (!win[m]) continue;
    bool minimal = true;
    for (std::uint32_t rest = m; rest != 0 && minimal; rest &= rest - 1) {
      if (win[m & ~(rest & (~rest + 1))]) minimal = false;
    }
    if (minimal) mw.push_back(PlayerSet::from_mask(m));
  }
  return SimpleGame(n, mw);
}

// Monotone functions on k variables as 2^k-bit truth tables (k <= 5).
std::vector<std::uint64_t> monotone_tables(int k) {
  std::vector<std::uint64_t> cur{0, 1};
  for (int v = 0; v < k; ++v) {
    const int half = 1 << v;
    std::vector<std::uint64_t> next;
    for (std::uint64_t f0 : cur) {
      for (std::uint64_t f1 : cur) {
        if ((f0 & ~f1) == 0) next.push_back(f0 | (f1 << half));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

void recursive_strategy(int n, const std::function<void(const SimpleGame&)>& visit) {
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint8_t> win(size);
  for (std::uint64_t t : monotone_tables(n)) {
    // Skip W = {} and the table with the empty coalition winning.
    if (t == 0 || (t & 1u)) continue;
    for (std::uint32_t m = 0; m < size; ++m) win[m] = static_cast<std::uint8_t>((t >> m) & 1u);
    visit(game_from_table(n, win));
  }
}

void antichain_strategy(int n, const std::function<void(const SimpleGame&)>& visit) {
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<PlayerSet> chosen;
  std::function<void(std::uint32_t)> go = [&](std::uint32_t m) {
    if (m == size) {
      if (!chosen.empty()) visit(SimpleGame(n, chosen));
      return;
    }
    go(m + 1);
    const PlayerSet s = PlayerSet::from_mask(m);
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](PlayerSet c) {
      return c.subset_of(s) || s.subset_of(c);
    });
    if (!comparable) {
      chosen.push_back(s);
      go(m + 1);
      chosen.pop_back();
    }
  };
  go(1);
}

// One orientation per complementary pair, closed under monotonicity.
void constant_sum_strategy(int n, const std::function<void(const SimpleGame&)>& visit) {
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint32_t full = size - 1;
  std::vector<std::uint32_t> order(size);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  using State = std::vector<std::int8_t>;
  // S wins: every superset wins, every subset of S^c loses.
  auto make_winning = [&](State& st, std::uint32_t s) {
    for (std::uint32_t t = s;; t = (t + 1) | s) {
      if (st[t] == 0 || st[full ^ t] == 1) return false;
      st[t] = 1;
      st[full ^ t] = 0;
      if (t == full) break;
    }
    return true;
  };
  State start(size, -1);
  if (!make_winning(start, full)) return;
  std::function<void(std::size_t, const State&)> go = [&](std::size_t i, const State& st) {
    while (i < order.size() && st[order[i]] != -1) ++i;
    if (i == order.size()) {
      std::vector<std::uint8_t> win(size);
      for (std::uint32_t m = 0; m < size; ++m) win[m] = static_cast<std::uint8_t>(st[m] == 1);
      visit(game_from_table(n, win));
      return;
    }
    const std::uint32_t s = order[i];
    for (std::uint32_t pick : {s, full ^ s}) {
      State next = st;
      if (make_winning(next, pick)) go(i + 1, next);
    }
  };
  go(0, start);
}

}  // namespace

bool GameFilter::accepts(const GameClass& c) const {
  if (!any()) return true;
  return (proper && c.proper) || (strong && c.strong) || (constant_sum && c.constant_sum);
}

GameFilter parse_filter(const std::string& text) {
  GameFilter f;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "proper") {
      f.proper = true;
    } else if (item == "strong") {
      f.strong = true;
    } else if (item == "constant-sum" || item == "constant_sum") {
      f.constant_sum = true;
    } else if (item != "none" && !item.empty()) {
      throw InvalidArgument("unknown filter '" + item + "'");
    }
  }
  return f;
}

std::string to_string(const GameFilter& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(f.proper, "proper");
  add(f.strong, "strong");
  add(f.constant_sum, "constant-sum");
  return out.empty() ? "none" : out;
}

void for_each_game(int n, const GameFilter& filter, const std::function<void(const SimpleGame&)>& visit,
                   EnumerationStrategy strategy) {
  if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
  const bool only_constant_sum = filter.constant_sum && !filter.proper && !filter.strong;
  if (only_constant_sum) {
    if (n > 6) throw Inconclusive("constant-sum enumeration is capped at 6 players");
    constant_sum_strategy(n, visit);
    return;
  }
  if (n > 5) throw Inconclusive("enumeration is capped at 5 players");
  auto filtered = [&](const SimpleGame& g) {
    if (filter.accepts(classify(g))) visit(g);
  };
  if (strategy == EnumerationStrategy::antichains) {
    antichain_strategy(n, filtered);
  } else {
    recursive_strategy(n, filtered);
  }
}

std::uint64_t count_games(int n, const GameFilter& filter, EnumerationStrategy strategy) {
  std::uint64_t count = 0;
  for_each_game(n, filter, [&](const SimpleGame&) { ++count; }, strategy);
  return count;
}

std::vector<std::uint32_t> canonical_form(const SimpleGame& game) {
  const int n = game.players();
  if (n > 8) throw InvalidArgument("canonical_form is limited to 8 players");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cur;
  do {
    cur.clear();
    for (PlayerSet m : game.min_winning()) {
      std::uint32_t img = 0;
      for (int p : m.members()) img |= 1u << perm[static_cast<std::size_t>(p - 1)];
      cur.push_back(img);
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SimpleGame random_game(int n, Rng& rng) {
  if (n < 1 || n > kMaxSweepPlayers) throw InvalidArgument("random_game needs 1 <= n <= 20");
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t count = 1 + uniform(rng, 5);
  std::vector<PlayerSet> family;
  for (std::uint64_t i = 0; i < count; ++i) {
    family.push_back(PlayerSet::from_mask(static_cast<std::uint32_t>(1 + uniform(rng, size - 1))));
  }
  return SimpleGame::from_winning_family(n, family);
}

SimpleGame random_proper_game(int n, Rng& rng) {
  if (n < 1 || n > 12) throw InvalidArgument("random_proper_game needs 1 <= n <= 12");
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> masks(size - 1);
  std::iota(masks.begin(), masks.end(), 1u);
  for (std::size_t i = masks.size(); i > 1; --i) std::swap(masks[i - 1], masks[uniform(rng, i)]);
  const std::uint64_t target = 1 + uniform(rng, size / 2);
  std::vector<PlayerSet> family;
  for (std::uint32_t m : masks) {
    if (family.size() >= target) break;
    const PlayerSet s = PlayerSet::from_mask(m);
    if (std::all_of(family.begin(), family.end(), [&](PlayerSet x) { return x.intersects(s); })) {
      family.push_back(s);
    }
  }
  return SimpleGame::from_winning_family(n, family);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::weighted:
      return "weighted";
    case Verdict::roughly_weighted:
      return "roughly_weighted";
    case Verdict::not_roughly_weighted:
      return "not_roughly_weighted";
  }
  return "unknown";
}

ClassifiedGame classify_weightedness(const SimpleGame& game) {
  if (std::holds_alternative<Representation>(check_weighted(game))) return {Verdict::weighted, std::nullopt};
  auto rough = check_rough(game);
  if (std::holds_alternative<Representation>(rough)) return {Verdict::roughly_weighted, std::nullopt};
  return {Verdict::not_roughly_weighted, normalize_witness(game, std::get<FarkasWitness>(rough))};
}

EnumerationReport enumerate_and_classify(int n, const GameFilter& filter, const EnumerationOptions& options) {
  EnumerationReport r;
  r.n = n;
  r.filter = filter;
  for_each_game(n, filter, [&](const SimpleGame& g) {
    ++r.total_games;
    ClassifiedGame c = classify_weightedness(g);
    switch (c.verdict) {
      case Verdict::weighted:
        ++r.weighted;
        break;
      case Verdict::roughly_weighted:
        ++r.roughly_weighted_only;
        break;
      case Verdict::not_roughly_weighted:
        ++r.not_roughly_weighted;
        if (!c.certificate || !verify_certificate(g, *c.certificate)) {
          throw InternalError("uncertified non-roughly-weighted game:\n" + format_game(g));
        }
        if (r.extremal_examples.size() < options.max_examples) {
          r.extremal_examples.push_back({g, std::nullopt, std::nullopt, c.certificate});
        }
        break;
    }
  });
  return r;
}

SmallPlayerSummary verify_small_player_theorems() {
  SmallPlayerSummary s;
  EnumerationReport small;
  small.n = 4;
  for (int n = 1; n <= 4; ++n) {
    const auto r = enumerate_and_classify(n, GameFilter{});
    small.total_games += r.total_games;
    small.weighted += r.weighted;
    small.roughly_weighted_only += r.roughly_weighted_only;
    small.not_roughly_weighted += r.not_roughly_weighted;
    for (const auto& e : r.extremal_examples) small.extremal_examples.push_back(e);
  }
  s.reports.push_back(std::move(small));
  s.reports.push_back(enumerate_and_classify(5, GameFilter{true, true, false}));
  s.reports.push_back(enumerate_and_classify(6, GameFilter{false, false, true}));
  for (const auto& r : s.reports) {
    if (r.not_roughly_weighted != 0) {
      throw InternalError("a game that is not roughly weighted on " + std::to_string(r.n) + " players (" +
                          to_string(r.filter) + "):\n" + format_game(r.extremal_examples.front().game));
    }
  }
  for (const SimpleGame& g : {gn2_game(5), example_proper6_game()}) {
    ClassifiedGame c = classify_weightedness(g);
    if (c.verdict != Verdict::not_roughly_weighted || !c.certificate || !verify_certificate(g, *c.certificate)) {
      throw InternalError("guard example is roughly weighted:\n" + format_game(g));
    }
    s.guards.push_back({g, std::nullopt, std::nullopt, c.certificate});
  }
  return s;
}

namespace {

std::optional<MaxLength> max_over(int n, bool potent) {
  if (n < 1 || n > 5) throw InvalidArgument("f(n) and g(n) are computed for n <= 5");
  std::optional<MaxLength> best;
  SearchLimits limits;
  limits.lp_shortcut = false;
  limits.max_length = 24;
  for_each_game(n, GameFilter{}, [&](const SimpleGame& g) {
    const ClassifiedGame c = classify_weightedness(g);
    if (c.verdict == Verdict::weighted) return;
    if (potent && c.verdict != Verdict::not_roughly_weighted) return;
    const LengthResult r = potent ? compute_g(g, limits) : compute_f(g, limits);
    const std::uint64_t v = r.value ? *r.value : r.lower_bound;
    if (!best) {
      best = MaxLength{v, g, r.exact};
    } else {
      if (!r.exact) best->exact = false;
      if (v > best->value) {
        best->value = v;
        best->extremal = g;
      }
    }
  });
  return best;
}

}  // namespace

std::optional<MaxLength> compute_f_of_n(int n) { return max_over(n, false); }
std::optional<MaxLength> compute_g_of_n(int n) { return max_over(n, true); }

}  // namespace sg
