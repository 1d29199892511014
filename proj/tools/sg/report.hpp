#pragma once

#include <json.hpp>

#include "sg/enumeration.hpp"
#include "sg/game.hpp"
#include "sg/search.hpp"
#include "sg/trading.hpp"
#include "sg/weightedness.hpp"

namespace sgcli {

using nlohmann::json;

json to_json(sg::PlayerSet s);
json to_json(const sg::SimpleGame& g);
json to_json(const sg::GameClass& c);
json to_json(const sg::Representation& r);
json to_json(const sg::Certificate& c);
json to_json(const sg::LengthResult& r);
json to_json(const sg::EnumerationReport& r);

// FNV-1a over the canonical .game text, as 16 hex digits.
std::string game_digest(const sg::SimpleGame& g);

}  // namespace sgcli
