#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sg/certificate_io.hpp"
#include "sg/constructions.hpp"
#include "sg/errors.hpp"
#include "sg/game_io.hpp"
#include "sg/search.hpp"
#include "sg/ternary.hpp"
#include "sg/trading.hpp"

using namespace sg;

namespace {

Certificate fano_lines_certificate() {
  Certificate c;
  c.potent = true;
  const int n = 7;
  const auto g = fano();
  for (auto x : g.min_winning()) {
    c.transform.winners.add(x);
    c.transform.losers.add(x.complement(n));
  }
  c.transform.winners.add(PlayerSet::grand(n));
  c.transform.losers.add(PlayerSet{});
  return c;
}

}  // namespace

TEST_CASE("ternary vectors") {
  auto v = vector_of_pair(PlayerSet::of({1, 2}), PlayerSet::of({2, 3}), 4);
  CHECK(v == TernaryVector(std::vector<int>{1, 0, -1, 0}));
  CHECK(v.at(3) == -1);
  CHECK(v.coordinate_sum() == 0);
  CHECK(positive_part(v) == PlayerSet::of({1}));
  CHECK(negative_part(v) == PlayerSet::of({3}));
  CHECK(v.raised(3) == TernaryVector(std::vector<int>{1, 0, 0, 0}));
  CHECK_THROWS_AS(v.raised(1), InvalidArgument);
  CHECK(v.negated().at(1) == -1);
  CHECK(TernaryVector(3).is_zero());
  CHECK_THROWS_AS(TernaryVector(std::vector<int>{2}), InvalidArgument);
  CHECK_THROWS_AS(vector_of_pair(PlayerSet::of({5}), PlayerSet{}, 4), InvalidArgument);
}

TEST_CASE("I(G) is an ideal and contains its restricted alphabets") {
  auto check = [](const SimpleGame& g) {
    auto all = ideal_members(g, IdealMode::all);
    REQUIRE(is_ideal(all, g.players()));
    for (auto mode : {IdealMode::min_win_cross_all_losing, IdealMode::all_winning_cross_max_losing})
      for (const auto& v : ideal_members(g, mode)) REQUIRE(std::binary_search(all.begin(), all.end(), v));
  };
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : sgtest::all_games(n)) check(g);
  for (const auto& g : sgtest::sample_games(5, 40, 5)) check(g);
  check(fano());

  std::vector<TernaryVector> not_ideal{TernaryVector(std::vector<int>{-1, 0})};
  CHECK_FALSE(is_ideal(not_ideal, 2));
}

TEST_CASE("balanced transforms are exactly the zero vector sums") {
  std::mt19937_64 rng(17);
  const int n = 5;
  for (int round = 0; round < 2000; ++round) {
    TradingTransform t;
    std::vector<int> sum(n, 0);
    const int j = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < j; ++i) {
      auto x = PlayerSet::from_mask(static_cast<std::uint32_t>(rng() % 32));
      auto y = PlayerSet::from_mask(static_cast<std::uint32_t>(rng() % 32));
      if (round % 3 == 0) y = x;  // keep some balanced samples around
      t.winners.add(x);
      t.losers.add(y);
      for (int p = 1; p <= n; ++p) sum[p - 1] += int(x.contains(p)) - int(y.contains(p));
    }
    bool zero = std::all_of(sum.begin(), sum.end(), [](int s) { return s == 0; });
    REQUIRE(validate_transform(t, n) == zero);
  }
  TradingTransform uneven;
  uneven.winners.add(PlayerSet::of({1}));
  CHECK_THROWS_AS(validate_transform(uneven, 3), InvalidArgument);
}

TEST_CASE("multisets") {
  CoalitionMultiset m{{PlayerSet::of({3}), 2}, {PlayerSet::of({1, 2}), 1}};
  m.add(PlayerSet::of({3}));
  CHECK(m.total() == 4);
  CHECK(m.count(PlayerSet::of({3})) == 3);
  CHECK(m.player_counts(3) == std::vector<std::uint64_t>{1, 1, 3});
  CHECK(m.remove_one(PlayerSet::of({1, 2})));
  CHECK_FALSE(m.remove_one(PlayerSet::of({1, 2})));
  CHECK(m.expand().size() == 3);
  CHECK(format_multiset(m) == "{3}^3");
}

TEST_CASE("certificate verdicts") {
  auto g = fano();
  auto c = fano_lines_certificate();
  CHECK(verify_certificate(g, c).ok());
  CHECK(c.length() == 8);
  CHECK(read_certificate_file(sgtest::data_path("certificates/fano_potent.cert")) == c);

  auto swapped = c;
  swapped.transform.winners.remove_one(PlayerSet::of({1, 2, 3}));
  swapped.transform.winners.add(PlayerSet::of({4, 5, 6, 7}));
  CHECK(verify_certificate(g, swapped).status == CertificateStatus::invalid_transform);

  Certificate losing_winner;
  losing_winner.transform.winners.add(PlayerSet::of({1, 2}));
  losing_winner.transform.losers.add(PlayerSet::of({1, 2}));
  CHECK(verify_certificate(g, losing_winner).status == CertificateStatus::winner_not_winning);

  Certificate winning_loser;
  winning_loser.transform.winners.add(PlayerSet::of({1, 2, 3}));
  winning_loser.transform.losers.add(PlayerSet::of({1, 2, 3}));
  CHECK(verify_certificate(g, winning_loser).status == CertificateStatus::loser_not_losing);

  auto f = compute_f(g);
  REQUIRE(f.certificate);
  auto fake = *f.certificate;
  fake.potent = true;
  CHECK(verify_certificate(g, fake).status == CertificateStatus::not_potent);

  Certificate outside;
  outside.transform.winners.add(PlayerSet::of({8}));
  outside.transform.losers.add(PlayerSet::of({8}));
  CHECK(verify_certificate(g, outside).status == CertificateStatus::invalid_transform);
  CHECK(verify_certificate(g, Certificate{}).status == CertificateStatus::invalid_transform);
}

TEST_CASE("potent certificates give EL sequences that break at-least-half") {
  auto g = fano();
  auto z = el_from_potent(fano_lines_certificate(), 7);
  CHECK(z.degree() == 7);
  CHECK(violates_at_least_half(g, z));

  for (const char* name : {"gn2_6", "proper6", "gn2_5"}) {
    auto game = read_game_file(sgtest::data_path(std::string("games/") + name + ".game"));
    auto cert = read_certificate_file(sgtest::data_path(std::string("certificates/") + name + ".cert"));
    REQUIRE(verify_certificate(game, cert).ok());
    CHECK(violates_at_least_half(game, el_from_potent(cert, game.players())));
  }

  Certificate plain;
  plain.transform.winners.add(PlayerSet::grand(7));
  plain.transform.losers.add(PlayerSet{});
  CHECK_THROWS_AS(el_from_potent(plain, 7), InvalidArgument);
  plain.potent = true;
  CHECK_THROWS_AS(el_from_potent(plain, 7), InvalidArgument);

  ElSequence odd;
  odd.coalitions = {PlayerSet::of({1, 2, 3})};
  odd.roles = {ElRole::winning};
  CHECK_THROWS_AS(violates_at_least_half(g, odd), InvalidArgument);
  ElSequence mislabeled;
  mislabeled.coalitions = {PlayerSet::of({1, 2}), PlayerSet::of({1, 2, 3})};
  mislabeled.roles = {ElRole::winning, ElRole::blocking};
  CHECK_THROWS_AS(violates_at_least_half(g, mislabeled), InvalidArgument);
}

TEST_CASE("EL violations exist exactly for games that are not roughly weighted") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : sgtest::all_games(n)) REQUIRE_FALSE(find_el_violation(g, 4));

  auto z = find_el_violation(fano(), 7);
  REQUIRE(z);
  CHECK(z->degree() <= 7);
  CHECK(violates_at_least_half(fano(), *z));

  auto p6 = example_proper6_game();
  auto zp = find_el_violation(p6, 6);
  REQUIRE(zp);
  CHECK(zp->degree() <= 6);
  CHECK(violates_at_least_half(p6, *zp));
  CHECK_FALSE(find_el_violation(example2_game(), 5));
}

TEST_CASE("certificate files") {
  auto c = fano_lines_certificate();
  CHECK(parse_certificate(format_certificate(c)) == c);
  auto text = "potent: false\nwinners:\n{1,2}^2\n{3}\nlosers:\n{1}\n{2,3}^2  # comment\n";
  auto p = parse_certificate(text);
  CHECK_FALSE(p.potent);
  CHECK(p.transform.winners.count(PlayerSet::of({1, 2})) == 2);
  CHECK(p.transform.losers.count(PlayerSet::of({2, 3})) == 2);
  CHECK(parse_certificate(format_certificate(p)) == p);

  auto expect = [](const std::string& body, std::size_t line) {
    try {
      parse_certificate(body);
      FAIL("accepted: " << body);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect("potent: maybe\n", 1);
  expect("potent: true\n{1}\n", 2);
  expect("potent: true\nwinners:\n{1,2\n", 3);
  expect("potent: true\nwinners:\n{1}^0\nlosers:\n{2}\n", 3);
  expect("potent: true\nwinners:\n{1}\n", 4);
  expect("winners:\n{1}\nlosers:\n{2}\n", 5);
}
