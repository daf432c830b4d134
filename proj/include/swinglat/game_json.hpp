#pragma once

#include "swinglat/game.hpp"
#include "swinglat/json_io.hpp"

namespace swinglat {

Json config_to_json(const GameConfig& c);
/// Starts from `base` and overrides the keys present in j. Unknown keys are an error.
GameConfig config_from_json(const Json& j, GameConfig base = {});

/// {"move": k, "effect": kind, ...} with only the populated fields.
Json effect_to_json(const Effect& e);
Effect effect_from_json(const Json& j);
/// Compact one-line form with "move" and "effect" leading, for replay logs.
std::string effect_line(const Effect& e);

Json snapshot_to_json(const Snapshot& s);
Snapshot snapshot_from_json(const Json& j);

} // namespace swinglat
