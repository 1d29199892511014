#include "sg/game.hpp"

#include <algorithm>

#include "sg/errors.hpp"

namespace sg {
namespace {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw InvalidArgument("player count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxPlayers));
  }
}

void check_sweep(int n, const char* what) {
  if (n > kMaxSweepPlayers) {
    throw Inconclusive(std::string(what) + ": " + std::to_string(n) +
                       " players exceeds the sweep cap of " +
                       std::to_string(kMaxSweepPlayers));
  }
}

}  // namespace

SimpleGame::SimpleGame(int n, std::vector<PlayerSet> min_winning)
    : n_(n), min_winning_(std::move(min_winning)) {
  check_player_count(n_);
  if (min_winning_.empty()) {
    throw InvalidArgument("a simple game needs at least one winning coalition");
  }
  const PlayerSet all = grand();
  for (PlayerSet m : min_winning_) {
    if (!m.subset_of(all)) {
      throw InvalidArgument("coalition " + to_string(m) + " has players outside 1.." +
                            std::to_string(n_));
    }
    if (m.empty()) {
      throw InvalidArgument("the empty coalition cannot be winning");
    }
  }
  std::sort(min_winning_.begin(), min_winning_.end());
  for (std::size_t i = 0; i + 1 < min_winning_.size(); ++i) {
    if (min_winning_[i] == min_winning_[i + 1]) {
      throw InvalidArgument("duplicate minimal winning coalition " +
                            to_string(min_winning_[i]));
    }
  }
  for (std::size_t i = 0; i < min_winning_.size(); ++i) {
    for (std::size_t j = 0; j < min_winning_.size(); ++j) {
      if (i != j && min_winning_[i].subset_of(min_winning_[j])) {
        throw InvalidArgument("not an antichain: " + to_string(min_winning_[i]) +
                              " is contained in " + to_string(min_winning_[j]));
      }
    }
  }
}

SimpleGame SimpleGame::from_winning_family(int n, std::span<const PlayerSet> family) {
  return SimpleGame(n, minimal_members(family));
}

bool SimpleGame::is_winning(PlayerSet x) const {
  if (!x.subset_of(grand())) {
    throw InvalidArgument("coalition " + to_string(x) + " has players outside 1.." +
                          std::to_string(n_));
  }
  return std::any_of(min_winning_.begin(), min_winning_.end(),
                     [x](PlayerSet m) { return m.subset_of(x); });
}

WinningTable::WinningTable(const SimpleGame& game) : n_(game.players()) {
  check_sweep(n_, "winning table");
  const std::uint32_t size = std::uint32_t{1} << n_;
  winning_.assign(size, 0);
  for (PlayerSet m : game.min_winning()) winning_[m.mask()] = 1;
  // Up-closure, one coordinate at a time.
  for (int bit = 0; bit < n_; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t x = 0; x < size; ++x) {
      if ((x & b) != 0 && winning_[x ^ b] != 0) winning_[x] = 1;
    }
  }
}

std::uint64_t WinningTable::count_winning() const {
  return static_cast<std::uint64_t>(std::count(winning_.begin(), winning_.end(), 1));
}

GameClass classify(const SimpleGame& game) {
  if (game.players() > kMaxSweepPlayers) return classify_structural(game);
  const WinningTable table(game);
  const std::uint32_t all = game.grand().mask();
  GameClass c{true, true, false};
  for (std::uint32_t x = 0; x <= all; ++x) {
    const bool wx = table.winning(x);
    const bool wc = table.winning(all & ~x);
    if (wx && wc) c.proper = false;
    if (!wx && !wc) c.strong = false;
  }
  c.constant_sum = c.proper && c.strong;
  return c;
}

GameClass classify_structural(const SimpleGame& game) {
  GameClass c{true, true, false};
  const auto& mw = game.min_winning();
  for (std::size_t i = 0; i < mw.size() && c.proper; ++i) {
    for (std::size_t j = i; j < mw.size(); ++j) {
      if (!mw[i].intersects(mw[j])) {
        c.proper = false;
        break;
      }
    }
  }
  const auto ml = maximal_losing(game);
  const PlayerSet all = game.grand();
  for (std::size_t i = 0; i < ml.size() && c.strong; ++i) {
    for (std::size_t j = i; j < ml.size(); ++j) {
      if ((ml[i] | ml[j]) == all) {
        c.strong = false;
        break;
      }
    }
  }
  c.constant_sum = c.proper && c.strong;
  return c;
}

std::vector<PlayerSet> minimal_members(std::span<const PlayerSet> family) {
  std::vector<PlayerSet> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end(), [](PlayerSet a, PlayerSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<PlayerSet> kept;
  for (PlayerSet s : sorted) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](PlayerSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<PlayerSet> minimal_transversals(std::span<const PlayerSet> edges) {
  // Berge's incremental dualisation.
  std::vector<PlayerSet> current{PlayerSet{}};
  for (PlayerSet edge : edges) {
    std::vector<PlayerSet> next;
    next.reserve(current.size() * 2);
    for (PlayerSet t : current) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (int p : edge.members()) next.push_back(t.with(p));
      }
    }
    current = minimal_members(next);
  }
  return current;
}

std::vector<PlayerSet> maximal_losing(const SimpleGame& game) {
  auto transversals = minimal_transversals(game.min_winning());
  std::vector<PlayerSet> out;
  out.reserve(transversals.size());
  for (PlayerSet t : transversals) out.push_back(t.complement(game.players()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlayerSet> maximal_losing_bruteforce(const SimpleGame& game) {
  const WinningTable table(game);
  const int n = game.players();
  std::vector<PlayerSet> out;
  for (std::uint32_t y = 0; y < table.size(); ++y) {
    if (table.winning(y)) continue;
    bool maximal = true;
    for (int bit = 0; bit < n && maximal; ++bit) {
      const std::uint32_t b = std::uint32_t{1} << bit;
      if ((y & b) == 0 && !table.winning(y | b)) maximal = false;
    }
    if (maximal) out.push_back(PlayerSet::from_mask(y));
  }
  return out;
}

SimpleGame dual(const SimpleGame& game) {
  return SimpleGame(game.players(), minimal_transversals(game.min_winning()));
}

SpecialPlayers find_special_players(const SimpleGame& game) {
  SpecialPlayers out;
  const int n = game.players();
  PlayerSet common = game.grand();
  for (PlayerSet m : game.min_winning()) {
    common = common & m;
    if (m.size() == 1) out.weak_dictators = out.weak_dictators | m;
  }
  out.vetoers = common;
  const PlayerSet all = game.grand();
  for (int i = 1; i <= n; ++i) {
    if (!game.is_winning(all.without(i))) out.has_losing_n_minus_1 = true;
  }
  if (out.has_losing_n_minus_1 != !out.vetoers.empty()) {
    throw InternalError("vetoer and (n-1)-losing-coalition reports disagree");
  }
  return out;
}

std::string describe(const SimpleGame& game) {
  std::string out;
  for (PlayerSet m : game.min_winning()) {
    if (!out.empty()) out += ' ';
    out += to_string(m);
  }
  return out;
}

}  // namespace sg
