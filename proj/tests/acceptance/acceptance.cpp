#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "oracles.hpp"
#include "sg/bounds.hpp"
#include "sg/constructions.hpp"
#include "sg/enumeration.hpp"
#include "sg/fishburn.hpp"
#include "sg/game_io.hpp"
#include "sg/search.hpp"
#include "sg/weightedness.hpp"

using namespace sg;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failed_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    std::ostringstream s;
    s << (total_ - failed_.size()) << "/" << total_ << " checks";
    for (const auto& f : failed_) s << "; failed: " << f;
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  std::size_t total_ = 0;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

std::string str(std::optional<std::uint64_t> v) { return v ? std::to_string(*v) : "none"; }

bool is_rough(const SimpleGame& g) { return std::holds_alternative<Representation>(check_rough(g)); }
bool is_weighted(const SimpleGame& g) { return std::holds_alternative<Representation>(check_weighted(g)); }

SearchLimits deep() {
  SearchLimits l;
  l.max_length = 24;
  return l;
}

Certificate rows_with_padding(const SimpleGame& g, std::uint64_t padding) {
  Certificate c;
  c.potent = true;
  for (auto x : g.min_winning()) {
    c.transform.winners.add(x);
    c.transform.losers.add(x.complement(g.players()));
  }
  c.transform.winners.add(g.grand(), padding);
  c.transform.losers.add(PlayerSet{}, padding);
  return c;
}

Certificate gn2_transform(int n) {
  Certificate c;
  c.potent = true;
  c.transform.winners.add(PlayerSet::of({1, 2}), n);
  c.transform.winners.add(PlayerSet::of({3, 4, 5}), n + 2);
  c.transform.winners.add(PlayerSet::grand(n));
  c.transform.losers.add(PlayerSet::of({2, 3, 5}), 3);
  c.transform.losers.add(PlayerSet::of({2, 3, 4}), 3);
  for (int extra = 6; extra <= n; ++extra) c.transform.losers.add(PlayerSet::of({2, 3, extra}));
  c.transform.losers.add(PlayerSet::of({1, 3, 4}));
  c.transform.losers.add(PlayerSet::of({1, 3, 5}));
  c.transform.losers.add(PlayerSet::of({1, 4, 5}), n - 1);
  c.transform.losers.add(PlayerSet{});
  return c;
}

void fano_triple(Checks& c) {
  auto path = std::filesystem::temp_directory_path() / "sg_acceptance_fano.game";
  write_game_file(path.string(), fano());
  std::string p = path.string();
  const char* argv[] = {"sg", "analyze", p.c_str(), "--json"};
  std::ostringstream out, err;
  int code = sgcli::run(4, argv, out, err);
  c.expect(code == 0, "analyze exit code " + std::to_string(code));
  auto j = nlohmann::json::parse(out.str());
  c.expect(j["verdict"] == "not_roughly_weighted", "analyze verdict");
  c.expect(j["g"]["value"] == 8, "analyze g");
  auto f = compute_f(fano());
  auto g = compute_g(fano());
  c.expect(f.exact && f.value == 2u, "f(Fano) = 2, got " + str(f.value));
  c.expect(g.exact && g.value == 8u, "g(Fano) = 8, got " + str(g.value));
  c.expect(g.certificate && verify_certificate(fano(), *g.certificate).ok(), "g certificate verifies");
}

void example2(Checks& c) {
  auto g = example2_game();
  Representation rep{std::vector<Rational>(6, Rational(1)), 3, Flavor::rough};
  c.expect(verify_representation(g, rep), "[3; 1x6] rough verifies");
  rep.flavor = Flavor::weighted;
  c.expect(!verify_representation(g, rep), "[3; 1x6] weighted rejected");
  auto w = check_weighted(g);
  c.expect(std::holds_alternative<FarkasWitness>(w), "check_weighted gives a witness");
  if (auto* fw = std::get_if<FarkasWitness>(&w))
    c.expect(verify_certificate(g, certificate_from_witness(g, *fw)).ok(), "witness certificate verifies");
  c.expect(is_rough(g), "check_rough gives a representation");
}

void un_council(Checks& c) {
  auto g = un_security_council();
  std::vector<Rational> w(15, Rational(1));
  for (int i = 0; i < 5; ++i) w[i] = 7;
  c.expect(verify_representation(g, {w, 39, Flavor::weighted}), "[39; 7x5, 1x10] verifies");
  auto r = check_weighted(g);
  c.expect(std::holds_alternative<Representation>(r) && verify_representation(g, std::get<Representation>(r)),
           "check_weighted finds a representation");
}

void hadamard(Checks& c) {
  auto h7 = hadamard_game(3);
  c.expect(is_isomorphic(h7, fano()), "HG_7 isomorphic to Fano");
  auto f7 = compute_f(h7);
  auto g7 = compute_g(h7);
  c.expect(f7.exact && f7.value == 2u, "f(HG_7) = 2, got " + str(f7.value));
  c.expect(g7.exact && g7.value == 8u, "g(HG_7) = 8, got " + str(g7.value));

  auto h15 = hadamard_game(4);
  auto rows = rows_with_padding(h15, 1);
  c.expect(rows.length() == 16 && verify_certificate(h15, rows).ok(), "HG_15 rows + (P, {}) certificate verifies");
  auto lb = coord_sum_lower_bound_g(h15);
  c.expect(lb == 16u, "coord_sum_lower_bound_g(HG_15) = 16, got " + str(lb));
  SearchLimits wide;
  wide.max_players = 16;
  auto g15 = compute_g(h15, wide);
  bool verified = g15.certificate && verify_certificate(h15, *g15.certificate).ok();
  c.expect(g15.exact && g15.value == 16u,
           "g(HG_15) = 16, exact search gives " + str(g15.value) + (verified ? " with a verified certificate" : ""));
}

void gn2(Checks& c) {
  for (int n : {5, 6}) {
    auto g = gn2_game(n);
    auto r = compute_g(g);
    c.expect(r.exact && r.value == std::uint64_t(2 * n + 3),
             "g(G_{" + std::to_string(n) + ",2}) = " + std::to_string(2 * n + 3) + ", got " + str(r.value));
    auto t = gn2_transform(n);
    c.expect(t.length() == std::uint64_t(2 * n + 3) && verify_certificate(g, t).ok(),
             "explicit transform verifies for n = " + std::to_string(n));
  }
}

void fishburn(Checks& c) {
  std::vector<std::int64_t> w{1, 2, 5, 6, 10};
  std::vector<TernaryVector> listed{TernaryVector(std::vector<int>{1, 0, 1, -1, 0}),
                                    TernaryVector(std::vector<int>{1, -1, -1, 1, 0}),
                                    TernaryVector(std::vector<int>{-1, 1, -1, -1, 1}),
                                    TernaryVector(std::vector<int>{-1, 0, 1, 1, -1})};
  std::set<TernaryVector> up_to_sign;
  for (const auto& v : listed) up_to_sign.insert(v[0] > 0 ? v : v.negated());
  auto found = find_relations(w);
  c.expect(std::set<TernaryVector>(found.begin(), found.end()) == up_to_sign && found.size() == 4,
           "relations of (1,2,5,6,10)");
  c.expect(check_fishburn(w, 4), "fourth Fishburn condition");
  FishburnSystem sys{{w, listed}, 4};
  c.expect(is_fishburn_system(sys), "listed system sums to zero");
  auto d = doubling_game(sys, {112, true});
  c.expect(std::vector<std::int64_t>(d.weights.begin() + 5, d.weights.end()) ==
               std::vector<std::int64_t>{106, 105, 100, 101},
           "heavy weights 106 105 100 101");
  c.expect(is_k_trade_robust(d.game, 3), "3-trade robust");
  c.expect(!is_k_trade_robust(d.game, 4), "not 4-trade robust");
  auto f = compute_f(d.game);
  c.expect(f.exact && f.value == 4u, "f = 4, got " + str(f.value));
}

void small_players(Checks& c) {
  auto s = verify_small_player_theorems();
  c.expect(s.reports.size() == 3, "three sweeps");
  for (const auto& r : s.reports) {
    c.expect(r.not_roughly_weighted == 0, "sweep n = " + std::to_string(r.n) + " has no counterexample");
    c.note("n=" + std::to_string(r.n) + " [" + to_string(r.filter) + "]: " + std::to_string(r.total_games) + " games");
  }
  c.expect(s.guards.size() == 2, "two guard games");
  for (const auto& gd : s.guards) {
    c.expect(!is_rough(gd.game), "guard is not roughly weighted");
    c.expect(gd.certificate && gd.certificate->potent && verify_certificate(gd.game, *gd.certificate).ok(),
             "guard certificate verifies");
  }
  if (s.guards.size() == 2) {
    c.expect(is_isomorphic(s.guards[0].game, gn2_game(5)), "first guard is G_{5,2}");
    c.expect(s.guards[1].game == example_proper6_game(), "second guard is the proper-6 example");
  }
}

void biconditional(Checks& c) {
  auto games = sgtest::all_games(1);
  for (int n = 2; n <= 4; ++n) {
    auto more = sgtest::all_games(n);
    games.insert(games.end(), more.begin(), more.end());
  }
  auto sample = sgtest::sample_games(5, 500, 20100401);
  games.insert(games.end(), sample.begin(), sample.end());
  const SearchLimits limits = deep();
  SearchLimits search_only = deep();
  search_only.lp_shortcut = false;
  std::size_t mismatches = 0, bad_witness = 0, non_rw = 0;
  for (const auto& g : games) {
    auto rough = check_rough(g);
    auto r = compute_g(g, limits);
    bool rep = std::holds_alternative<Representation>(rough);
    if (rep) {
      if (!r.unbounded() || !verify_representation(g, std::get<Representation>(rough))) ++mismatches;
      if (compute_g(g, search_only).value) ++mismatches;
    } else {
      ++non_rw;
      if (!r.exact || !r.value || !r.certificate || !verify_certificate(g, *r.certificate).ok()) ++mismatches;
      auto cert = normalize_witness(g, std::get<FarkasWitness>(rough));
      if (!cert.potent || !verify_certificate(g, cert).ok()) ++bad_witness;
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " games break the biconditional");
  c.expect(bad_witness == 0, std::to_string(bad_witness) + " witnesses fail to normalise");
  c.note(std::to_string(games.size()) + " games, " + std::to_string(non_rw) + " not roughly weighted");
}

void duality(Checks& c) {
  auto games = sgtest::all_games(1);
  for (int n = 2; n <= 4; ++n) {
    auto more = sgtest::all_games(n);
    games.insert(games.end(), more.begin(), more.end());
  }
  auto sample = sgtest::sample_games(5, 400, 77);
  games.insert(games.end(), sample.begin(), sample.end());
  std::size_t bad = 0;
  for (const auto& g : games) {
    auto d = dual(g);
    auto cg = classify(g), cd = classify(d);
    bool ok = dual(d) == g && cd.proper == cg.strong && cd.strong == cg.proper;
    auto fg = compute_f(g), fd = compute_f(d);
    auto gg = compute_g(g, deep()), gd = compute_g(d, deep());
    ok = ok && fg.exact && fd.exact && gg.exact && gd.exact && fg.value == fd.value && gg.value == gd.value;
    ok = ok && is_rough(g) == is_rough(d) && is_weighted(g) == is_weighted(d);
    if (!ok) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " games break duality");
  c.note(std::to_string(games.size()) + " games");
}

void bounds(Checks& c) {
  std::size_t checked = 0, bad = 0;
  for (int n = 1; n <= 5; ++n) {
    const BigInt cap = taylor_zwicker_cap(n);
    for_each_game(n, {}, [&](const SimpleGame& g) {
      if (is_weighted(g)) return;
      ++checked;
      auto f = compute_f(g);
      bool ok = f.exact && f.value && *f.value >= 2 && *f.value >= std::uint64_t((n - 1) / 2) && BigInt(*f.value) <= cap;
      if (!is_rough(g)) {
        auto r = compute_g(g, deep());
        ok = ok && r.value && f.value && *f.value + 1 <= *r.value;
      }
      if (!ok) ++bad;
    });
  }
  c.expect(checked > 0 && bad == 0, std::to_string(bad) + " of " + std::to_string(checked) + " non-weighted games");
  c.note(std::to_string(checked) + " non-weighted games, n <= 5");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Checks&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all{
      {1, "Fano: not roughly weighted, f = 2, g = 8", 5, fano_triple},
      {2, "constant-sum six-player game: rough [3; 1x6], not weighted", 1, example2},
      {3, "UN Security Council: [39; 7x5, 1x10]", 1, un_council},
      {4, "Hadamard games", 60, hadamard},
      {5, "G_{n,2}: g = 2n + 3 for n = 5, 6", 60, gn2},
      {6, "Fishburn doubling: 3-robust, f = 4", 600, fishburn},
      {7, "small-player sweeps", 1800, small_players},
      {8, "rough weights iff no potent certificate", 600, biconditional},
      {9, "duality", 600, duality},
      {10, "bounds consistency", 60, bounds},
  };
  bool all_ok = true;
  for (const auto& cr : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), cr.id) == selected.end()) continue;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(secs < cr.limit_s, "time limit " + std::to_string(int(cr.limit_s)) + " s");
    all_ok = all_ok && checks.ok();
    std::cout << "criterion " << std::setw(2) << cr.id << ": " << (checks.ok() ? "PASS" : "FAIL") << "  "
              << std::fixed << std::setprecision(2) << secs << " s  " << cr.title << "  (" << checks.summary() << ")"
              << std::endl;
  }
  return all_ok ? 0 : 1;
}
