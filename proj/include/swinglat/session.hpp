#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "swinglat/game.hpp"
#include "swinglat/game_json.hpp"

namespace swinglat {

// One game session speaking the JSON message protocol. Holds no clock:
// the owner feeds elapsed time through advance().
//
//   client -> server  {"type":"click_cell","cell":[o,a,b,t]}
//                     {"type":"choose_start","edge":[lo,hi]}
//                     {"type":"new_game","config":{...}}        config optional
//   server -> client  {"type":"snapshot", ...snapshot}
//                     {"type":"effect", ...effect}
//                     {"type":"error","reason":"..."}
class Session {
public:
    explicit Session(GameConfig config);

    /// Every message gets at least one reply. Malformed input yields an
    /// error reply and leaves the game untouched.
    std::vector<Json> handle_message(std::string_view text);

    /// Advances the game clock; replies are empty when nothing happened.
    std::vector<Json> advance(std::int64_t ms);

    /// Time until the engine next acts on its own, or nullopt when idle.
    std::optional<std::int64_t> ms_until_deadline() const;

    const GameState& state() const { return state_; }
    Json snapshot_message() const;

private:
    std::vector<Json> apply(const GameEvent& event);

    GameConfig config_;
    GameState state_;
    int games_started_ = 1;
};

Json error_message(std::string_view reason);

} // namespace swinglat
