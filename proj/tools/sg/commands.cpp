#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "sg/bounds.hpp"
#include "sg/certificate_io.hpp"
#include "sg/constructions.hpp"
#include "sg/enumeration.hpp"
#include "sg/errors.hpp"
#include "sg/fishburn.hpp"
#include "sg/game_io.hpp"
#include "sg/representation_io.hpp"
#include "sg/search.hpp"
#include "sg/weightedness.hpp"

namespace sgcli {
namespace {

struct Common {
  std::uint64_t max_len = 16;
  bool json = false;
  bool strict = false;
  bool timings = false;
  int threads = 1;
  std::uint64_t seed = 1;
};

class Clock {
 public:
  void lap(json& into, const char* phase) {
    const auto now = std::chrono::steady_clock::now();
    into[phase] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw sg::Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Parse errors carry the file name for the "file:line:col" diagnostic.
struct FileParseError {
  std::string message;
};

template <class F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const sg::ParseError& e) {
    throw FileParseError{path + ":" + e.what()};
  }
}

sg::SimpleGame load_game(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return sg::parse_game(t); });
}

sg::SearchLimits limits_from(const Common& c) {
  sg::SearchLimits l;
  l.max_length = c.max_len;
  return l;
}

std::string length_text(const sg::LengthResult& r) {
  if (r.unbounded()) return "unbounded";
  if (r.value) return std::to_string(*r.value);
  return "inconclusive (> " + std::to_string(r.lower_bound - 1) + ")";
}

std::string class_text(const sg::GameClass& c) {
  std::string out;
  out += c.proper ? "proper" : "not proper";
  out += c.strong ? ", strong" : ", not strong";
  if (c.constant_sum) out += ", constant sum";
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const std::string& path, bool search, const Common& common, std::ostream& out) {
  Clock clock;
  json timings;
  const sg::SimpleGame game = load_game(path);
  const sg::GameClass cls =
      game.players() <= sg::kMaxSweepPlayers ? sg::classify(game) : sg::classify_structural(game);
  clock.lap(timings, "parse_classify");

  std::optional<sg::Representation> rep;
  std::optional<sg::Certificate> plain;
  std::optional<sg::Certificate> potent;
  sg::Verdict verdict = sg::Verdict::weighted;
  auto weighted = sg::check_weighted(game);
  if (auto* r = std::get_if<sg::Representation>(&weighted)) {
    rep = *r;
  } else {
    plain = sg::certificate_from_witness(game, std::get<sg::FarkasWitness>(weighted));
    auto rough = sg::check_rough(game);
    if (auto* rr = std::get_if<sg::Representation>(&rough)) {
      verdict = sg::Verdict::roughly_weighted;
      rep = *rr;
    } else {
      verdict = sg::Verdict::not_roughly_weighted;
      potent = sg::normalize_witness(game, std::get<sg::FarkasWitness>(rough));
    }
  }
  clock.lap(timings, "lp");

  std::optional<sg::LengthResult> f;
  std::optional<sg::LengthResult> g;
  if (search) {
    f = sg::compute_f(game, limits_from(common));
    g = sg::compute_g(game, limits_from(common));
    clock.lap(timings, "search");
  }
  const bool exact = !search || (f->exact && g->exact);
  const auto bounds = sg::bounds_for(game);

  if (common.json) {
    json j{{"schema", 1},
           {"game", to_json(game)},
           {"class", to_json(cls)},
           {"verdict", sg::to_string(verdict)},
           {"exact", exact},
           {"search_cap", common.max_len}};
    j["representation"] = rep ? to_json(*rep) : json(nullptr);
    j["certificate"] = potent ? to_json(*potent) : json(nullptr);
    j["non_weightedness_certificate"] = plain ? to_json(*plain) : json(nullptr);
    j["f"] = f ? to_json(*f) : json(nullptr);
    j["g"] = g ? to_json(*g) : json(nullptr);
    json b{{"taylor_zwicker", bounds.tz_upper.get_str()}};
    b["coord_sum_lower_g"] = bounds.coord_sum_lower_g ? json(*bounds.coord_sum_lower_g) : json(nullptr);
    j["bounds"] = b;
    if (common.timings) j["timings_ms"] = timings;
    emit(out, j);
  } else {
    out << "players: " << game.players() << "\n";
    out << "digest: " << game_digest(game) << "\n";
    out << "class: " << class_text(cls) << "\n";
    out << "verdict: " << sg::to_string(verdict) << "\n";
    if (rep) out << "representation: " << sg::format_representation_inline(*rep) << "\n";
    if (plain) out << "non-weightedness certificate: " << sg::format_multiset(plain->transform.winners) << " ; "
                   << sg::format_multiset(plain->transform.losers) << "\n";
    if (potent) out << "potent certificate: " << sg::format_multiset(potent->transform.winners) << " ; "
                    << sg::format_multiset(potent->transform.losers) << "\n";
    if (f) out << "f: " << length_text(*f) << "\n";
    if (g) out << "g: " << length_text(*g) << "\n";
    out << "coord-sum lower bound for g: "
        << (bounds.coord_sum_lower_g ? std::to_string(*bounds.coord_sum_lower_g) : "unbounded") << "\n";
    if (common.timings) {
      for (auto& [k, v] : timings.items()) out << "time " << k << ": " << v.get<double>() << " ms\n";
    }
  }
  return (!exact && common.strict) ? kInconclusive : kOk;
}

int cmd_verify(const std::string& game_path, const std::string& cert_path, const std::string& rep_path,
               const std::string& rep_text, const std::string& flavor, bool potent, const Common& common,
               std::ostream& out, std::ostream& err) {
  const sg::SimpleGame game = load_game(game_path);
  const int given = !cert_path.empty() + !rep_path.empty() + !rep_text.empty();
  if (given != 1) {
    err << "verify: give exactly one of --certificate, --representation, --rep\n";
    return kUsageError;
  }
  bool ok = false;
  std::string detail;
  if (!cert_path.empty()) {
    if (!flavor.empty()) {
      err << "verify: --flavor applies to representations\n";
      return kUsageError;
    }
    const auto c = parse_file(cert_path, [](const std::string& t) { return sg::parse_certificate(t); });
    if (potent && !c.potent) {
      err << "verify: --potent given but the certificate is not marked potent\n";
      return kUsageError;
    }
    const auto verdict = sg::verify_certificate(game, c);
    ok = verdict.ok();
    detail = verdict.detail;
  } else {
    sg::Representation rep =
        rep_text.empty() ? parse_file(rep_path, [](const std::string& t) { return sg::parse_representation(t); })
                         : [&] {
                             try {
                               return sg::parse_representation(rep_text);
                             } catch (const sg::ParseError& e) {
                               throw FileParseError{std::string("--rep:") + e.what()};
                             }
                           }();
    if (!flavor.empty() && sg::parse_flavor(flavor) != rep.flavor) {
      err << "verify: representation is " << sg::to_string(rep.flavor) << ", expected " << flavor << "\n";
      return kUsageError;
    }
    if (rep.weights.size() != static_cast<std::size_t>(game.players())) {
      err << "verify: " << rep.weights.size() << " weights for " << game.players() << " players\n";
      return kUsageError;
    }
    try {
      ok = sg::verify_representation(game, rep);
    } catch (const sg::InvalidArgument& e) {
      ok = false;
      detail = e.what();
    }
  }
  if (common.json) {
    json j{{"schema", 1}, {"valid", ok}, {"detail", detail}};
    emit(out, j);
  } else {
    out << (ok ? "valid" : "invalid");
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_certificate(const std::string& path, bool potent, const Common& common, std::ostream& out,
                    std::ostream& err) {
  const sg::SimpleGame game = load_game(path);
  const sg::LengthResult r =
      potent ? sg::compute_g(game, limits_from(common)) : sg::compute_f(game, limits_from(common));
  if (common.json) {
    json j = to_json(r);
    j["schema"] = 1;
    j["potent"] = potent;
    emit(out, j);
  } else if (r.certificate) {
    out << "# length " << *r.value << "\n" << sg::format_certificate(*r.certificate);
  }
  if (r.unbounded()) {
    err << "no " << (potent ? "potent " : "") << "certificate: the game is "
        << (potent ? "roughly weighted" : "weighted") << "\n";
    return kVerificationFailed;
  }
  if (!r.value) {
    err << "inconclusive: no certificate shorter than " << r.lower_bound << " (raise --max-len)\n";
    return common.strict ? kInconclusive : kOk;
  }
  return kOk;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> v;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    for (char& ch : tok) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream t(tok);
    int x = 0;
    while (t >> x) v.push_back(x);
    if (!t.eof()) throw sg::InvalidArgument("expected integers, got '" + tok + "'");
  }
  return v;
}

int cmd_enumerate(int n, const std::string& filter_text, const std::string& check, const std::string& report_path,
                  std::uint64_t sample, const Common& common, std::ostream& out) {
  const sg::GameFilter filter = sg::parse_filter(filter_text);
  sg::EnumerationReport report;
  std::uint64_t not_weighted = 0;
  if (sample == 0) {
    report = sg::enumerate_and_classify(n, filter);
    not_weighted = report.roughly_weighted_only + report.not_roughly_weighted;
  } else {
    sg::Rng rng(common.seed);
    report.n = n;
    report.filter = filter;
    const bool proper_only = filter.proper && !filter.strong && !filter.constant_sum;
    std::uint64_t drawn = 0;
    while (report.total_games < sample) {
      if (++drawn > 1000 * sample) throw sg::Inconclusive("sampler rarely hits the filter");
      sg::SimpleGame g = proper_only ? sg::random_proper_game(n, rng) : sg::random_game(n, rng);
      if (!filter.accepts(sg::classify(g))) continue;
      ++report.total_games;
      const auto c = sg::classify_weightedness(g);
      if (c.verdict == sg::Verdict::weighted) {
        ++report.weighted;
      } else if (c.verdict == sg::Verdict::roughly_weighted) {
        ++report.roughly_weighted_only;
      } else {
        ++report.not_roughly_weighted;
        if (report.extremal_examples.size() < 8) report.extremal_examples.push_back({g, {}, {}, c.certificate});
      }
    }
    not_weighted = report.roughly_weighted_only + report.not_roughly_weighted;
  }
  json j = to_json(report);
  j["schema"] = 1;
  j["check"] = check;
  j["sampled"] = sample != 0;
  if (sample != 0) j["seed"] = common.seed;
  j["violations"] = check == "weighted" ? not_weighted : report.not_roughly_weighted;
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw sg::Error("cannot write " + report_path);
    f << j.dump(2) << "\n";
  }
  if (common.json) {
    emit(out, j);
  } else {
    out << "n: " << n << "\nfilter: " << sg::to_string(filter) << "\n";
    if (sample != 0) out << "sampled: " << sample << " (seed " << common.seed << ")\n";
    out << "total: " << report.total_games << "\nweighted: " << report.weighted
        << "\nroughly weighted only: " << report.roughly_weighted_only
        << "\nnot roughly weighted: " << report.not_roughly_weighted << "\n";
    if (check == "weighted") out << "not weighted: " << not_weighted << "\n";
  }
  return kOk;
}

void write_game(const sg::SimpleGame& g, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << sg::format_game(g);
  } else {
    sg::write_game_file(out_path, g);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple games: weightedness, rough weightedness and trading certificates", "sg"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for sampled runs");

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "JSON output");
    sub->add_flag("--strict", common.strict, "Exit 4 when a search cap makes a result inexact");
    sub->add_option("--max-len", common.max_len, "Longest certificate searched")->check(CLI::Range(1, 255));
    sub->add_option("--threads", common.threads, "Worker threads (results do not depend on it)");
    sub->add_option("--seed", common.seed, "Seed for sampled runs");
  };

  std::string game_path;
  bool no_search = false;
  auto* analyze = app.add_subcommand("analyze", "Classify a game and find representations or certificates");
  analyze->add_option("game", game_path, ".game file ('-' for stdin)")->required();
  analyze->add_flag("--no-search", no_search, "Skip the f/g searches");
  analyze->add_flag("--timings", common.timings, "Report per-phase wall time");
  add_common(analyze);

  std::string cert_path;
  std::string rep_path;
  std::string rep_text;
  std::string flavor;
  bool potent = false;
  auto* verify = app.add_subcommand("verify", "Check a certificate or representation against a game");
  verify->add_option("game", game_path, ".game file")->required();
  verify->add_option("--certificate", cert_path, "Certificate file");
  verify->add_option("--representation", rep_path, "Representation file");
  verify->add_option("--rep", rep_text, "Inline representation, e.g. \"[3; 1 1 1 1 1 1] rough\"");
  verify->add_option("--flavor", flavor, "Expected representation flavor")->check(CLI::IsMember({"weighted", "rough"}));
  verify->add_flag("--potent", potent, "Require a potent certificate");
  add_common(verify);

  auto* certificate = app.add_subcommand("certificate", "Shortest certificate of non-weightedness");
  certificate->add_option("game", game_path, ".game file")->required();
  certificate->add_flag("--potent", potent, "Shortest potent certificate instead");
  add_common(certificate);

  std::string out_path;
  int k = 3;
  int n = 5;
  int q = 2;
  std::string pattern;
  std::string weights_text;
  std::int64_t threshold = 0;
  bool swap_sides = false;
  auto* construct = app.add_subcommand("construct", "Write one of the built-in games");
  construct->require_subcommand(1);
  construct->add_option("-o,--out", out_path, "Output file (default stdout)");
  construct->add_subcommand("fano", "Fano plane game");
  construct->add_subcommand("example2", "Six-player constant-sum game with rough weights [3; 1 1 1 1 1 1]");
  construct->add_subcommand("proper6", "Six-player game that is not roughly weighted");
  construct->add_subcommand("un", "UN Security Council");
  construct->add_subcommand("hadamard", "Hadamard game from the Sylvester matrix of order 2^k")
      ->add_option("--k", k)->required();
  auto* cyclic = construct->add_subcommand("cyclic", "Cyclic shifts of a pattern");
  cyclic->add_option("--n", n)->required();
  cyclic->add_option("--pattern", pattern, "Members, e.g. \"1 2 4\"")->required();
  construct->add_subcommand("projective", "Lines of the projective plane over GF(q)")->add_option("--q", q)->required();
  construct->add_subcommand("gn2", "{1,2}, {3,4,5} and the 4-sets avoiding both")->add_option("--n", n)->required();
  auto* doubling = construct->add_subcommand("doubling", "Doubling construction on a Fishburn weight vector");
  doubling->add_option("--weights", weights_text, "Positive integer weights")->required();
  doubling->add_option("--threshold", threshold, "N (default 2 w(P) + 1)");
  doubling->add_flag("--swap-sides", swap_sides, "Make the Y-side threshold coalitions winning");
  for (auto* sub : construct->get_subcommands({})) sub->fallthrough();

  std::string filter_text = "none";
  std::string check = "rough";
  std::string report_path;
  std::uint64_t sample = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Sweep all games on n players");
  enumerate->add_option("--n", n)->required()->check(CLI::Range(1, 12));
  enumerate->add_option("--filter", filter_text, "none, proper, strong, constant-sum or a comma list (union)");
  enumerate->add_option("--check", check)->check(CLI::IsMember({"rough", "weighted"}));
  enumerate->add_option("--report", report_path, "Write the JSON report here");
  enumerate->add_option("--sample", sample, "Classify this many random games instead of all");
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(game_path, !no_search, common, out);
    if (*verify) return cmd_verify(game_path, cert_path, rep_path, rep_text, flavor, potent, common, out, err);
    if (*certificate) return cmd_certificate(game_path, potent, common, out, err);
    if (*enumerate) return cmd_enumerate(n, filter_text, check, report_path, sample, common, out);
    if (*construct) {
      sg::SimpleGame g = sg::fano();
      const std::string which = construct->get_subcommands().front()->get_name();
      if (which == "example2") {
        g = sg::example2_game();
      } else if (which == "proper6") {
        g = sg::example_proper6_game();
      } else if (which == "un") {
        g = sg::un_security_council();
      } else if (which == "hadamard") {
        g = sg::hadamard_game(k);
      } else if (which == "cyclic") {
        g = sg::cyclic_game(sg::PlayerSet::of(parse_ints(pattern)), n);
      } else if (which == "projective") {
        g = sg::projective_game(q);
      } else if (which == "gn2") {
        g = sg::gn2_game(n);
      } else if (which == "doubling") {
        std::vector<std::int64_t> w;
        for (int x : parse_ints(weights_text)) w.push_back(x);
        const auto rel = sg::find_relations(w);
        auto system = sg::fishburn_system(w, static_cast<int>(rel.size()));
        if (!system) {
          err << "construct: the weights do not satisfy a Fishburn condition (" << rel.size() << " relations)\n";
          return kUsageError;
        }
        sg::DoublingOptions opt;
        if (threshold != 0) opt.threshold = threshold;
        opt.swap_sides = swap_sides;
        g = sg::doubling_game(*system, opt).game;
      }
      write_game(g, out_path, out);
      return kOk;
    }
  } catch (const FileParseError& e) {
    err << e.message << "\n";
    return kParseError;
  } catch (const sg::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const sg::Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const sg::InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const sg::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sgcli
