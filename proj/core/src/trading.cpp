#include "sg/trading.hpp"

#include <algorithm>

#include "sg/errors.hpp"

namespace sg {

CoalitionMultiset::CoalitionMultiset(std::initializer_list<Entry> entries) {
  for (const auto& [c, m] : entries) add(c, m);
}

void CoalitionMultiset::add(PlayerSet coalition, std::uint64_t count) {
  if (count == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), coalition,
                             [](const Entry& e, PlayerSet c) { return e.first < c; });
  if (it != entries_.end() && it->first == coalition) {
    it->second += count;
  } else {
    entries_.insert(it, Entry{coalition, count});
  }
}

bool CoalitionMultiset::remove_one(PlayerSet coalition) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), coalition,
                             [](const Entry& e, PlayerSet c) { return e.first < c; });
  if (it == entries_.end() || it->first != coalition) return false;
  if (--it->second == 0) entries_.erase(it);
  return true;
}

std::uint64_t CoalitionMultiset::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries_) t += e.second;
  return t;
}

std::uint64_t CoalitionMultiset::count(PlayerSet coalition) const {
  for (const auto& e : entries_) {
    if (e.first == coalition) return e.second;
  }
  return 0;
}

std::vector<std::uint64_t> CoalitionMultiset::player_counts(int n) const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  for (const auto& [c, m] : entries_) {
    for (int p : c.members()) {
      if (p > n) throw InvalidArgument("coalition " + to_string(c) + " exceeds " + std::to_string(n) + " players");
      counts[static_cast<std::size_t>(p - 1)] += m;
    }
  }
  return counts;
}

std::vector<PlayerSet> CoalitionMultiset::expand() const {
  std::vector<PlayerSet> out;
  for (const auto& [c, m] : entries_) out.insert(out.end(), m, c);
  return out;
}

bool validate_transform(const TradingTransform& t, int n) {
  if (t.winners.total() != t.losers.total()) {
    throw InvalidArgument("trading transform sides differ in length (" +
                          std::to_string(t.winners.total()) + " vs " +
                          std::to_string(t.losers.total()) + ")");
  }
  // Route 1: pair the expanded sequences and add the ternary vectors.
  const auto xs = t.winners.expand();
  const auto ys = t.losers.expand();
  std::vector<std::int64_t> sum(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const TernaryVector v = vector_of_pair(xs[i], ys[i], n);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += v[k];
  }
  const bool by_vectors = std::all_of(sum.begin(), sum.end(), [](std::int64_t s) { return s == 0; });
  // Route 2: per-player occurrence counts on the multisets.
  const bool by_counts = t.winners.player_counts(n) == t.losers.player_counts(n);
  if (by_vectors != by_counts) {
    throw InternalError("vector-sum and occurrence-count balance disagree");
  }
  return by_vectors;
}

CertificateVerdict verify_certificate(const SimpleGame& game, const Certificate& c) {
  const int n = game.players();
  const PlayerSet all = game.grand();
  auto in_range = [&](const CoalitionMultiset& side) {
    return std::all_of(side.entries().begin(), side.entries().end(),
                       [&](const auto& e) { return e.first.subset_of(all); });
  };
  if (!in_range(c.transform.winners) || !in_range(c.transform.losers)) {
    return {CertificateStatus::invalid_transform, "coalition outside 1.." + std::to_string(n)};
  }
  if (c.transform.winners.total() != c.transform.losers.total()) {
    return {CertificateStatus::invalid_transform, "sides differ in length"};
  }
  if (c.transform.winners.total() == 0) {
    return {CertificateStatus::invalid_transform, "empty transform"};
  }
  if (!validate_transform(c.transform, n)) {
    return {CertificateStatus::invalid_transform, "player occurrences do not balance"};
  }
  for (const auto& [x, m] : c.transform.winners.entries()) {
    if (!game.is_winning(x)) return {CertificateStatus::winner_not_winning, to_string(x) + " is losing"};
  }
  for (const auto& [y, m] : c.transform.losers.entries()) {
    if (game.is_winning(y)) return {CertificateStatus::loser_not_losing, to_string(y) + " is winning"};
  }
  if (c.potent && (c.transform.winners.count(all) == 0 || c.transform.losers.count(PlayerSet{}) == 0)) {
    return {CertificateStatus::not_potent, "potent certificate lacks the (P, {}) pair"};
  }
  return {};
}

ElSequence el_from_potent(const Certificate& c, int n) {
  if (!c.potent) throw InvalidArgument("EL construction needs a potent certificate");
  CoalitionMultiset winners = c.transform.winners;
  CoalitionMultiset losers = c.transform.losers;
  if (!winners.remove_one(PlayerSet::grand(n)) || !losers.remove_one(PlayerSet{})) {
    throw InvalidArgument("certificate flagged potent but lacks the (P, {}) pair");
  }
  if (winners.total() == 0) {
    throw InvalidArgument("(P; {}) alone is not a trading transform");
  }
  ElSequence z;
  for (PlayerSet x : winners.expand()) {
    z.coalitions.push_back(x);
    z.roles.push_back(ElRole::winning);
  }
  for (PlayerSet y : losers.expand()) {
    z.coalitions.push_back(y.complement(n));
    z.roles.push_back(ElRole::blocking);
  }
  return z;
}

bool violates_at_least_half(const SimpleGame& game, const ElSequence& z) {
  const int n = game.players();
  if (z.coalitions.size() != z.roles.size() || z.coalitions.empty() || z.coalitions.size() % 2 != 0) {
    throw InvalidArgument("EL sequence must have an even, nonzero number of role-tagged coalitions");
  }
  std::size_t winning = 0;
  for (std::size_t i = 0; i < z.coalitions.size(); ++i) {
    const PlayerSet c = z.coalitions[i];
    if (z.roles[i] == ElRole::winning) {
      ++winning;
      if (!game.is_winning(c)) throw InvalidArgument(to_string(c) + " is tagged winning but loses");
    } else if (game.is_winning(c.complement(n))) {
      throw InvalidArgument(to_string(c) + " is tagged blocking but its complement wins");
    }
  }
  const std::size_t k = z.degree();
  if (winning != k) throw InvalidArgument("EL sequence needs equally many winning and blocking entries");
  std::vector<std::size_t> occurrences(static_cast<std::size_t>(n), 0);
  for (PlayerSet c : z.coalitions) {
    for (int p : c.members()) ++occurrences[static_cast<std::size_t>(p - 1)];
  }
  return std::all_of(occurrences.begin(), occurrences.end(), [k](std::size_t o) { return o < k; });
}

}  // namespace sg
