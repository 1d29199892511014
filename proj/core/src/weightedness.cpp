#include "sg/weightedness.hpp"

#include <algorithm>
#include <bit>

#include "sg/errors.hpp"
#include "sg/simplex.hpp"

namespace sg {
namespace {

Rational weight_of(std::span<const Rational> w, PlayerSet x) {
  Rational s = 0;
  for (int p : x.members()) s += w[static_cast<std::size_t>(p - 1)];
  return s;
}

void check_lp_size(const SimpleGame& game) {
  if (game.players() > kMaxSweepPlayers) {
    throw Inconclusive("weightedness checks are capped at " + std::to_string(kMaxSweepPlayers) +
                       " players");
  }
}

std::uint64_t to_u64(const BigInt& v) {
  if (sgn(v) < 0 || !v.fits_ulong_p()) throw InternalError("multiplicity does not fit in 64 bits");
  return v.get_ui();
}

// Scales weights to coprime integers (a positive multiple of the input).
std::vector<Rational> integral_weights(std::vector<Rational> w) {
  const BigInt den = common_denominator(w);
  BigInt g = 0;
  for (auto& x : w) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : w) x /= g;
  }
  return w;
}

struct Alphabet {
  std::vector<PlayerSet> winners;  // minimal winning
  std::vector<PlayerSet> losers;   // maximal losing
};

// Columns: alpha_X, beta_Y, then one slack per player.
// Rows 0..n-1: sum alpha chi_i(X) - sum beta chi_i(Y) + s_i = rhs_i.
// Row n: sum alpha - sum beta = 0.
EqualitySystem balance_system(const Alphabet& ab, int n, std::size_t extra_rows, const Rational& player_rhs) {
  const std::size_t a = ab.winners.size();
  const std::size_t b = ab.losers.size();
  const std::size_t un = static_cast<std::size_t>(n);
  EqualitySystem sys(un + 1 + extra_rows, a + b + un);
  for (std::size_t k = 0; k < a; ++k) {
    for (int p : ab.winners[k].members()) sys.at(static_cast<std::size_t>(p - 1), k) = 1;
    sys.at(un, k) = 1;
  }
  for (std::size_t k = 0; k < b; ++k) {
    for (int p : ab.losers[k].members()) sys.at(static_cast<std::size_t>(p - 1), a + k) = -1;
    sys.at(un, a + k) = -1;
  }
  for (std::size_t i = 0; i < un; ++i) {
    sys.at(i, a + b + i) = 1;
    sys.b[i] = player_rhs;
  }
  return sys;
}

// Integer witness from a feasible point; `unit_slack` adds the constant
// vector 1 that the rough system moves to the right-hand side.
FarkasWitness witness_from_point(const Alphabet& ab, int n, const std::vector<Rational>& x, bool unit_slack) {
  const std::size_t a = ab.winners.size();
  const std::size_t b = ab.losers.size();
  const BigInt scale = common_denominator(x);
  auto scaled = [&](std::size_t j) { return to_u64(BigInt(x[j] * scale)); };
  FarkasWitness w;
  w.players = n;
  // Pair winners with losers by merging the two weighted lists.
  std::size_t i = 0;
  std::size_t k = 0;
  std::uint64_t left_w = 0;
  std::uint64_t left_l = 0;
  auto advance_w = [&] {
    while (i < a && (left_w = scaled(i)) == 0) ++i;
  };
  auto advance_l = [&] {
    while (k < b && (left_l = scaled(a + k)) == 0) ++k;
  };
  advance_w();
  advance_l();
  while (i < a && k < b) {
    const std::uint64_t t = std::min(left_w, left_l);
    w.terms.push_back({ab.winners[i], ab.losers[k], t});
    left_w -= t;
    left_l -= t;
    if (left_w == 0) {
      ++i;
      advance_w();
    }
    if (left_l == 0) {
      ++k;
      advance_l();
    }
  }
  if (i < a || k < b) throw InternalError("winner and loser totals differ in the witness");
  w.slack.resize(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < static_cast<std::size_t>(n); ++p) {
    BigInt u = BigInt(x[a + b + p] * scale);
    if (unit_slack) u += scale;
    w.slack[p] = to_u64(u);
  }
  return w;
}

// Moves `amount` units of slack at `player` into terms whose loser contains
// the player but whose winner does not: (X, Y) becomes (X, Y - {player}).
void absorb(FarkasWitness& w, int player, std::uint64_t amount) {
  std::vector<WitnessTerm> added;
  for (auto& term : w.terms) {
    if (amount == 0) break;
    if (!term.loser.contains(player) || term.winner.contains(player)) continue;
    const std::uint64_t t = std::min(term.multiplicity, amount);
    term.multiplicity -= t;
    added.push_back({term.winner, term.loser.without(player), t});
    amount -= t;
  }
  if (amount != 0) throw InternalError("slack cannot be absorbed at player " + std::to_string(player));
  w.terms.insert(w.terms.end(), added.begin(), added.end());
  // Merge duplicates, drop zero terms.
  std::sort(w.terms.begin(), w.terms.end(), [](const WitnessTerm& l, const WitnessTerm& r) {
    return l.winner != r.winner ? l.winner < r.winner : l.loser < r.loser;
  });
  std::vector<WitnessTerm> merged;
  for (const auto& t : w.terms) {
    if (t.multiplicity == 0) continue;
    if (!merged.empty() && merged.back().winner == t.winner && merged.back().loser == t.loser) {
      merged.back().multiplicity += t.multiplicity;
    } else {
      merged.push_back(t);
    }
  }
  w.terms = std::move(merged);
}

void absorb_down_to(FarkasWitness& w, std::uint64_t target) {
  for (int p = 1; p <= w.players; ++p) {
    auto& u = w.slack[static_cast<std::size_t>(p - 1)];
    if (u > target) {
      absorb(w, p, u - target);
      u = target;
    }
  }
}

Alphabet alphabet_of(const SimpleGame& game) {
  return Alphabet{game.min_winning(), maximal_losing(game)};
}

}  // namespace

std::uint64_t FarkasWitness::total_multiplicity() const {
  std::uint64_t t = 0;
  for (const auto& term : terms) t += term.multiplicity;
  return t;
}

bool FarkasWitness::balanced() const {
  if (slack.size() != static_cast<std::size_t>(players)) return false;
  std::vector<std::int64_t> sum(slack.begin(), slack.end());
  for (const auto& term : terms) {
    const auto v = vector_of_pair(term.winner, term.loser, players);
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += static_cast<std::int64_t>(term.multiplicity) * v[i];
    }
  }
  return std::all_of(sum.begin(), sum.end(), [](std::int64_t s) { return s == 0; });
}

bool verify_representation(const SimpleGame& game, const Representation& rep) {
  const int n = game.players();
  if (rep.weights.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("representation has " + std::to_string(rep.weights.size()) +
                          " weights for " + std::to_string(n) + " players");
  }
  for (const auto& w : rep.weights) {
    if (sgn(w) < 0) throw InvalidArgument("negative weight " + to_string(w));
  }
  if (rep.flavor == Flavor::rough) {
    const bool all_zero = sgn(rep.quota) == 0 &&
                          std::all_of(rep.weights.begin(), rep.weights.end(),
                                      [](const Rational& w) { return sgn(w) == 0; });
    if (all_zero) return false;
  }
  auto consistent = [&](const Rational& wx, bool winning) {
    if (rep.flavor == Flavor::weighted) return winning == (wx >= rep.quota);
    if (wx > rep.quota) return winning;
    if (wx < rep.quota) return !winning;
    return true;
  };
  if (n <= kMaxSweepPlayers) {
    const WinningTable table(game);
    // Gray-code walk keeps each coalition weight one update away.
    Rational wx = 0;
    std::uint32_t prev = 0;
    if (!consistent(wx, table.winning(0u))) return false;
    for (std::uint32_t k = 1; k < table.size(); ++k) {
      const std::uint32_t gray = k ^ (k >> 1);
      const std::uint32_t flip = gray ^ prev;
      const int p = std::countr_zero(flip);
      if ((gray & flip) != 0) {
        wx += rep.weights[static_cast<std::size_t>(p)];
      } else {
        wx -= rep.weights[static_cast<std::size_t>(p)];
      }
      prev = gray;
      if (!consistent(wx, table.winning(gray))) return false;
    }
    return true;
  }
  // Monotone weights: the extreme coalitions sit on the antichains.
  for (PlayerSet m : game.min_winning()) {
    if (!consistent(weight_of(rep.weights, m), true)) return false;
  }
  for (PlayerSet y : maximal_losing(game)) {
    if (!consistent(weight_of(rep.weights, y), false)) return false;
  }
  return true;
}

std::optional<Representation> representation_from_weights(const SimpleGame& game,
                                                          std::vector<Rational> weights,
                                                          Flavor flavor) {
  if (weights.size() != static_cast<std::size_t>(game.players())) {
    throw InvalidArgument("weight vector length does not match the game");
  }
  for (auto& w : weights) {
    if (sgn(w) < 0) w = 0;
  }
  if (std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) == 0; })) {
    return std::nullopt;
  }
  std::optional<Rational> min_win;
  for (PlayerSet m : game.min_winning()) {
    Rational w = weight_of(weights, m);
    if (!min_win || w < *min_win) min_win = w;
  }
  std::optional<Rational> max_lose;
  for (PlayerSet y : maximal_losing(game)) {
    Rational w = weight_of(weights, y);
    if (!max_lose || w > *max_lose) max_lose = w;
  }
  Representation rep;
  rep.weights = std::move(weights);
  rep.flavor = flavor;
  if (flavor == Flavor::weighted) {
    if (max_lose && !(*max_lose < *min_win)) return std::nullopt;
    rep.quota = *min_win;
  } else {
    if (max_lose && *max_lose > *min_win) return std::nullopt;
    rep.quota = max_lose ? Rational((*max_lose + *min_win) / 2) : *min_win;
  }
  if (!verify_representation(game, rep)) return std::nullopt;
  return rep;
}

WeightednessResult check_weighted(const SimpleGame& game) {
  check_lp_size(game);
  const int n = game.players();
  const Alphabet ab = alphabet_of(game);
  const std::size_t a = ab.winners.size();
  const std::size_t b = ab.losers.size();
  EqualitySystem sys = balance_system(ab, n, 1, Rational(0));
  const std::size_t norm = static_cast<std::size_t>(n) + 1;
  for (std::size_t k = 0; k < b; ++k) sys.at(norm, a + k) = 1;
  sys.b[norm] = 1;

  auto result = solve_feasibility(sys);
  if (auto* ray = std::get_if<FarkasRay>(&result)) {
    std::vector<Rational> w(ray->y.begin(), ray->y.begin() + n);
    auto rep = representation_from_weights(game, integral_weights(std::move(w)), Flavor::weighted);
    if (!rep) throw InternalError("Farkas ray does not yield a weighted representation");
    return *rep;
  }
  FarkasWitness witness = witness_from_point(ab, n, std::get<FeasiblePoint>(result).x, false);
  absorb_down_to(witness, 0);
  if (!witness.balanced() || witness.total_multiplicity() < 2) {
    throw InternalError("weightedness witness fails its invariants");
  }
  if (!verify_certificate(game, certificate_from_witness(game, witness))) {
    throw InternalError("weightedness witness does not yield a certificate");
  }
  return witness;
}

WeightednessResult check_rough(const SimpleGame& game) {
  check_lp_size(game);
  const int n = game.players();
  const Alphabet ab = alphabet_of(game);
  EqualitySystem sys = balance_system(ab, n, 0, Rational(-1));

  auto result = solve_feasibility(sys);
  if (auto* ray = std::get_if<FarkasRay>(&result)) {
    std::vector<Rational> w(ray->y.begin(), ray->y.begin() + n);
    auto rep = representation_from_weights(game, integral_weights(std::move(w)), Flavor::rough);
    if (!rep) throw InternalError("Farkas ray does not yield a rough representation");
    return *rep;
  }
  FarkasWitness witness = witness_from_point(ab, n, std::get<FeasiblePoint>(result).x, true);
  const bool positive = std::all_of(witness.slack.begin(), witness.slack.end(),
                                    [](std::uint64_t u) { return u >= 1; });
  if (!witness.balanced() || !positive) throw InternalError("rough witness fails its invariants");
  return witness;
}

Certificate certificate_from_witness(const SimpleGame& game, const FarkasWitness& witness) {
  if (witness.players != game.players()) throw InvalidArgument("witness and game differ in size");
  if (std::any_of(witness.slack.begin(), witness.slack.end(), [](std::uint64_t u) { return u != 0; })) {
    throw InvalidArgument("a plain certificate needs a witness with zero slack");
  }
  Certificate c;
  for (const auto& t : witness.terms) {
    c.transform.winners.add(t.winner, t.multiplicity);
    c.transform.losers.add(t.loser, t.multiplicity);
  }
  return c;
}

Certificate normalize_witness(const SimpleGame& game, const FarkasWitness& witness) {
  if (witness.players != game.players() || witness.slack.size() != static_cast<std::size_t>(game.players())) {
    throw InvalidArgument("witness and game differ in size");
  }
  if (std::any_of(witness.slack.begin(), witness.slack.end(), [](std::uint64_t u) { return u == 0; })) {
    throw InvalidArgument("normalisation needs every slack coordinate >= 1");
  }
  if (!witness.balanced()) throw InvalidArgument("witness is not balanced");
  FarkasWitness w = witness;
  absorb_down_to(w, 1);
  Certificate c;
  c.potent = true;
  for (const auto& t : w.terms) {
    c.transform.winners.add(t.winner, t.multiplicity);
    c.transform.losers.add(t.loser, t.multiplicity);
  }
  c.transform.winners.add(game.grand());
  c.transform.losers.add(PlayerSet{});
  if (auto verdict = verify_certificate(game, c); !verdict) {
    throw InternalError("normalised witness is not a potent certificate: " + verdict.detail);
  }
  return c;
}

}  // namespace sg
