#pragma once

#include <cstdint>
#include <optional>

#include "sg/game.hpp"
#include "sg/trading.hpp"

namespace sg {

// Hard ceiling for the packed search state.
inline constexpr int kMaxSearchPlayers = 16;

struct SearchLimits {
  int max_players = 12;
  std::uint64_t max_length = 16;
  // Level-set entries plus decomposition calls; exceeding it makes the
  // result inexact instead of running on.
  std::uint64_t node_budget = 40'000'000;
  // Answer Unbounded from the LP instead of searching to the cap.
  bool lp_shortcut = true;
};

// Outcome of a minimal-length search.
//   exact, value set      : the minimum, with a certificate of that length
//   exact, value empty    : Unbounded (no certificate of any length)
//   not exact             : nothing shorter than lower_bound exists; the
//                           search stopped at a cap
struct LengthResult {
  std::optional<std::uint64_t> value;
  bool exact = true;
  std::uint64_t lower_bound = 0;
  std::optional<Certificate> certificate;
  std::uint64_t nodes = 0;

  bool unbounded() const { return exact && !value; }
};

// f(G): shortest certificate of non-weightedness.
LengthResult compute_f(const SimpleGame& game, const SearchLimits& limits = {});
// g(G): shortest potent certificate, its length counting the (P, {}) pair.
LengthResult compute_g(const SimpleGame& game, const SearchLimits& limits = {});

// True iff no certificate of length <= k exists. Throws Inconclusive when a
// cap (players, length 20, node budget) stops the search.
bool is_k_trade_robust(const SimpleGame& game, std::uint64_t k, const SearchLimits& limits = {});

struct RobustnessReport {
  LengthResult f;
  LengthResult g;
  std::uint64_t search_cap = 0;
  bool exact() const { return f.exact && g.exact; }
};

RobustnessReport analyze_robustness(const SimpleGame& game, const SearchLimits& limits = {});

// An EL sequence of degree <= max_degree in which every player occurs in
// fewer than k of the 2k coalitions, if one exists (n <= 8).
std::optional<ElSequence> find_el_violation(const SimpleGame& game, int max_degree);

}  // namespace sg
