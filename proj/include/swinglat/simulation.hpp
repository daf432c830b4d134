#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swinglat/game.hpp"

namespace swinglat {

struct SimulationResult {
    std::vector<Effect> effects;
    GameState final_state;
    long events = 0;
    // First engine invariant violation, with the event index it followed.
    std::optional<std::string> violation;
};

/// Folds up to `events` autoplay events (stops early at game over), checking
/// every engine invariant after each one.
SimulationResult simulate(const GameConfig& config, long events, std::uint64_t policy_seed);

/// One JSON object per line, newline terminated.
std::string effect_log(const std::vector<Effect>& effects);

/// Rule checks over a finished effect log: lives reconcile with the causes,
/// every board replacement follows a lost life, and no move returns to the
/// edge left by the previous move. Returns the failures.
std::vector<std::string> audit_effects(const std::vector<Effect>& effects, int initial_lives, int final_lives);

} // namespace swinglat
