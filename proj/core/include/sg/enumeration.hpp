#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sg/game.hpp"
#include "sg/trading.hpp"

namespace sg {

// A union of classes: a game passes if it has any selected property. No
// selection means every game passes.
struct GameFilter {
  bool proper = false;
  bool strong = false;
  bool constant_sum = false;

  bool any() const { return proper || strong || constant_sum; }
  bool accepts(const GameClass& c) const;
  friend bool operator==(const GameFilter&, const GameFilter&) = default;
};

// "none", "proper", "strong", "constant-sum" (or constant_sum), comma lists.
GameFilter parse_filter(const std::string& text);
std::string to_string(const GameFilter& f);

enum class EnumerationStrategy {
  // f = f0 or x_n f1 with monotone f0 <= f1, over truth tables.
  recursive_functions,
  // Backtracking over antichains of nonempty coalitions.
  antichains,
};

// Every game on n players passing the filter, once each. Unfiltered and
// proper/strong sweeps need n <= 5; a pure constant-sum filter runs a
// complementary-pair backtrack and allows n <= 6.
void for_each_game(int n, const GameFilter& filter, const std::function<void(const SimpleGame&)>& visit,
                   EnumerationStrategy strategy = EnumerationStrategy::recursive_functions);
std::uint64_t count_games(int n, const GameFilter& filter,
                          EnumerationStrategy strategy = EnumerationStrategy::recursive_functions);

// Smallest sorted mask list over all relabelings (n <= 8).
std::vector<std::uint32_t> canonical_form(const SimpleGame& game);

using Rng = std::mt19937_64;
// A few random coalitions, closed upward.
SimpleGame random_game(int n, Rng& rng);
// A random intersecting family, closed upward: always proper.
SimpleGame random_proper_game(int n, Rng& rng);

enum class Verdict { weighted, roughly_weighted, not_roughly_weighted };
std::string to_string(Verdict v);

struct ClassifiedGame {
  Verdict verdict = Verdict::weighted;
  // Potent certificate from the rough witness when not roughly weighted.
  std::optional<Certificate> certificate;
};
// check_weighted, then check_rough if needed.
ClassifiedGame classify_weightedness(const SimpleGame& game);

struct ExtremalExample {
  SimpleGame game;
  std::optional<std::uint64_t> f;
  std::optional<std::uint64_t> g;
  std::optional<Certificate> certificate;
};

struct EnumerationReport {
  int n = 0;
  GameFilter filter;
  std::uint64_t total_games = 0;
  std::uint64_t weighted = 0;
  std::uint64_t roughly_weighted_only = 0;
  std::uint64_t not_roughly_weighted = 0;
  std::vector<ExtremalExample> extremal_examples;
};

struct EnumerationOptions {
  // Non-roughly-weighted games kept in the report (all are certified).
  std::size_t max_examples = 8;
};

// Counts by verdict. Every non-roughly-weighted game gets its potent
// certificate verified; a failure raises InternalError.
EnumerationReport enumerate_and_classify(int n, const GameFilter& filter, const EnumerationOptions& options = {});

struct SmallPlayerSummary {
  std::vector<EnumerationReport> reports;  // n <= 4 all, n = 5 proper or strong, n = 6 constant-sum
  std::vector<ExtremalExample> guards;     // the 5-player and proper 6-player non-RW examples
};

// Throws InternalError naming the game if any swept game is not roughly
// weighted, or if a guard example turns out roughly weighted.
SmallPlayerSummary verify_small_player_theorems();

struct MaxLength {
  std::uint64_t value = 0;
  SimpleGame extremal;
  bool exact = true;
};
// Max of f over non-weighted games / g over non-roughly-weighted games on n
// players (n <= 5). nullopt when no such game exists.
std::optional<MaxLength> compute_f_of_n(int n);
std::optional<MaxLength> compute_g_of_n(int n);

}  // namespace sg
