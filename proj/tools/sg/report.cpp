#include "report.hpp"

#include <cstdio>

#include "sg/game_io.hpp"
#include "sg/representation_io.hpp"

namespace sgcli {

json to_json(sg::PlayerSet s) { return json(s.members()); }

json to_json(const sg::SimpleGame& g) {
  json mw = json::array();
  for (auto m : g.min_winning()) mw.push_back(to_json(m));
  return {{"players", g.players()}, {"min_winning", mw}, {"digest", game_digest(g)}};
}

json to_json(const sg::GameClass& c) {
  return {{"proper", c.proper}, {"strong", c.strong}, {"constant_sum", c.constant_sum}};
}

json to_json(const sg::Representation& r) {
  json w = json::array();
  for (const auto& x : r.weights) w.push_back(sg::to_string(x));
  return {{"flavor", sg::to_string(r.flavor)}, {"quota", sg::to_string(r.quota)}, {"weights", w}};
}

namespace {
json side(const sg::CoalitionMultiset& m) {
  json out = json::array();
  for (const auto& [s, k] : m.entries()) out.push_back({{"coalition", to_json(s)}, {"multiplicity", k}});
  return out;
}
}  // namespace

json to_json(const sg::Certificate& c) {
  return {{"potent", c.potent},
          {"length", c.length()},
          {"winners", side(c.transform.winners)},
          {"losers", side(c.transform.losers)}};
}

json to_json(const sg::LengthResult& r) {
  json out{{"exact", r.exact}, {"unbounded", r.unbounded()}, {"lower_bound", r.lower_bound}};
  out["value"] = r.value ? json(*r.value) : json(nullptr);
  out["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return out;
}

json to_json(const sg::EnumerationReport& r) {
  json ex = json::array();
  for (const auto& e : r.extremal_examples) {
    json item{{"game", to_json(e.game)}};
    item["f"] = e.f ? json(*e.f) : json(nullptr);
    item["g"] = e.g ? json(*e.g) : json(nullptr);
    item["certificate"] = e.certificate ? to_json(*e.certificate) : json(nullptr);
    ex.push_back(item);
  }
  return {{"n", r.n},
          {"filter", sg::to_string(r.filter)},
          {"total_games", r.total_games},
          {"weighted", r.weighted},
          {"roughly_weighted_only", r.roughly_weighted_only},
          {"not_roughly_weighted", r.not_roughly_weighted},
          {"extremal_examples", ex}};
}

std::string game_digest(const sg::SimpleGame& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : sg::format_game(g)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sgcli
