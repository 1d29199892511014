#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sg/constructions.hpp"
#include "sg/enumeration.hpp"
#include "sg/errors.hpp"
#include "sg/search.hpp"
#include "sg/weightedness.hpp"

using namespace sg;

namespace {

using Key = std::vector<PlayerSet>;

std::multiset<Key> collect(int n, const GameFilter& f, EnumerationStrategy s) {
  std::multiset<Key> out;
  for_each_game(n, f, [&](const SimpleGame& g) { out.insert(g.min_winning()); }, s);
  return out;
}

bool is_rough(const SimpleGame& g) { return std::holds_alternative<Representation>(check_rough(g)); }

}  // namespace

TEST_CASE("enumeration matches brute force over all families") {
  for (int n = 1; n <= 4; ++n) {
    std::multiset<Key> brute;
    for (const auto& g : sgtest::brute_force_games(n)) brute.insert(g.min_winning());
    REQUIRE(collect(n, {}, EnumerationStrategy::recursive_functions) == brute);
    REQUIRE(collect(n, {}, EnumerationStrategy::antichains) == brute);
    for (GameFilter f : {GameFilter{true, false, false}, GameFilter{false, true, false}, GameFilter{false, false, true},
                         GameFilter{true, true, false}}) {
      std::multiset<Key> expected;
      for (const auto& g : sgtest::brute_force_games(n)) {
        bool p = sgtest::brute_proper(g), s = sgtest::brute_strong(g);
        if ((f.proper && p) || (f.strong && s) || (f.constant_sum && p && s)) expected.insert(g.min_winning());
      }
      REQUIRE(collect(n, f, EnumerationStrategy::recursive_functions) == expected);
    }
  }
  CHECK(count_games(2, {}) == 4);
  CHECK(count_games(4, {}) == 166);
}

TEST_CASE("five-player sweep") {
  auto a = collect(5, {}, EnumerationStrategy::recursive_functions);
  auto b = collect(5, {}, EnumerationStrategy::antichains);
  CHECK(a.size() == 7579);
  CHECK(a == b);
  CHECK(std::set<Key>(a.begin(), a.end()).size() == a.size());
  CHECK_THROWS_AS(count_games(6, {}), Inconclusive);
}

TEST_CASE("constant-sum games on n + 1 players biject with proper games on n") {
  for (int n = 2; n <= 5; ++n) {
    auto cs = count_games(n + 1, GameFilter{false, false, true});
    auto proper = count_games(n, GameFilter{true, false, false});
    REQUIRE(cs == proper + 1);
  }
  CHECK(count_games(6, GameFilter{false, false, true}) == 2646);
  for_each_game(6, GameFilter{false, false, true}, [](const SimpleGame& g) {
    REQUIRE(classify(g).constant_sum);
    REQUIRE(dual(g) == g);
  });
}

TEST_CASE("game sets are closed under duality") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Key> all;
    for_each_game(n, {}, [&](const SimpleGame& g) { all.insert(g.min_winning()); });
    for (const auto& key : all) {
      SimpleGame g(n, key);
      REQUIRE(all.count(dual(g).min_winning()) == 1);
    }
  }
  for (const auto& g : sgtest::all_games(4)) REQUIRE(is_rough(g) == is_rough(dual(g)));
  for (const auto& g : sgtest::sample_games(5, 300, 8)) REQUIRE(is_rough(g) == is_rough(dual(g)));
}

TEST_CASE("sufficient conditions for rough weights") {
  for (int n = 1; n <= 5; ++n)
    for_each_game(n, {}, [&](const SimpleGame& g) {
      auto c = classify(g);
      bool two_winner = std::any_of(g.min_winning().begin(), g.min_winning().end(),
                                    [](PlayerSet x) { return x.size() <= 2; });
      bool small_loser = false;
      for (auto y : maximal_losing(g)) small_loser = small_loser || y.size() >= n - 2;
      auto sp = find_special_players(g);
      bool special = !sp.weak_dictators.empty() || !sp.vetoers.empty() || sp.has_losing_n_minus_1;
      if ((c.proper && two_winner) || (c.strong && small_loser) || special) REQUIRE(is_rough(g));
    });
  Rng rng(6);
  int with_pair = 0;
  for (int i = 0; i < 400; ++i) {
    auto g = random_proper_game(6, rng);
    REQUIRE(classify(g).proper);
    bool two_winner = std::any_of(g.min_winning().begin(), g.min_winning().end(),
                                  [](PlayerSet x) { return x.size() <= 2; });
    if (!two_winner) continue;
    ++with_pair;
    REQUIRE(is_rough(g));
  }
  CHECK(with_pair > 0);
}

TEST_CASE("canonical forms") {
  for (const auto& g : sgtest::sample_games(6, 60, 4)) {
    std::vector<int> perm{2, 4, 6, 1, 3, 5};
    REQUIRE(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
  std::set<std::vector<std::uint32_t>> classes;
  for (const auto& g : sgtest::all_games(3)) classes.insert(canonical_form(g));
  CHECK(classes.size() == 8);
  CHECK(canonical_form(fano()) == canonical_form(hadamard_game(3)));
}

TEST_CASE("random generators are seeded") {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) CHECK(random_game(6, a) == random_game(6, b));
}

TEST_CASE("filters") {
  CHECK(parse_filter("none") == GameFilter{});
  CHECK(parse_filter("proper,strong") == GameFilter{true, true, false});
  CHECK(parse_filter("constant-sum") == GameFilter{false, false, true});
  CHECK(parse_filter("constant_sum") == GameFilter{false, false, true});
  CHECK(to_string(GameFilter{true, true, false}) == "proper,strong");
  CHECK_THROWS_AS(parse_filter("round"), InvalidArgument);
  CHECK(GameFilter{}.accepts(GameClass{}));
  CHECK_FALSE(GameFilter{true, false, false}.accepts(GameClass{}));
}

TEST_CASE("classified reports") {
  auto r4 = enumerate_and_classify(4, {});
  CHECK(r4.total_games == 166);
  CHECK(r4.weighted + r4.roughly_weighted_only + r4.not_roughly_weighted == r4.total_games);
  CHECK(r4.not_roughly_weighted == 0);
  CHECK(r4.weighted == 148);

  auto r5 = enumerate_and_classify(5, {});
  CHECK(r5.total_games == 7579);
  CHECK(r5.weighted + r5.roughly_weighted_only + r5.not_roughly_weighted == r5.total_games);
  CHECK(r5.not_roughly_weighted == 560);
  CHECK(r5.extremal_examples.size() <= 8);
  for (const auto& e : r5.extremal_examples) {
    REQUIRE(e.certificate);
    CHECK(verify_certificate(e.game, *e.certificate).ok());
  }
  bool has_g52 = false;
  for_each_game(5, {}, [&](const SimpleGame& g) {
    if (!has_g52 && is_isomorphic(g, gn2_game(5))) has_g52 = !is_rough(g);
  });
  CHECK(has_g52);

  for (const auto& g : {fano(), example2_game(), un_security_council()}) {
    auto c = classify_weightedness(g);
    CHECK(c.certificate.has_value() == (c.verdict == Verdict::not_roughly_weighted));
  }
  CHECK(classify_weightedness(fano()).verdict == Verdict::not_roughly_weighted);
  CHECK(classify_weightedness(example2_game()).verdict == Verdict::roughly_weighted);
  CHECK(to_string(Verdict::roughly_weighted) == "roughly_weighted");

  for_each_game(5, GameFilter{false, false, true}, [](const SimpleGame& g) {
    REQUIRE(std::holds_alternative<Representation>(check_weighted(g)));
  });
}

TEST_CASE("f(n) and g(n) for tiny n") {
  CHECK_FALSE(compute_f_of_n(2));
  CHECK_FALSE(compute_f_of_n(3));
  auto f4 = compute_f_of_n(4);
  REQUIRE(f4);
  CHECK(f4->value == 2);
  CHECK_FALSE(compute_g_of_n(4));
  auto g5 = compute_g_of_n(5);
  REQUIRE(g5);
  CHECK(g5->exact);
  CHECK(g5->value >= 13);
  CHECK(g5->value == 17);
  SearchLimits limits;
  limits.max_length = 24;
  auto r = compute_g(g5->extremal, limits);
  REQUIRE(r.certificate);
  CHECK(verify_certificate(g5->extremal, *r.certificate).ok());
  CHECK(sgtest::shortest_certificate(g5->extremal, true, 16) == std::nullopt);
}
