#include "swinglat/simulation.hpp"

#include "swinglat/game_json.hpp"

namespace swinglat {

SimulationResult simulate(const GameConfig& config, long events, std::uint64_t policy_seed) {
    SimulationResult r{{}, new_game(config), 0, std::nullopt};
    Autoplayer player(policy_seed);
    for (long i = 0; i < events && r.final_state.phase != Phase::GameOver; ++i) {
        const GameEvent ev = player.next_event(r.final_state);
        auto t = handle_event(std::move(r.final_state), ev);
        r.final_state = std::move(t.state);
        r.effects.insert(r.effects.end(), t.effects.begin(), t.effects.end());
        r.events = i + 1;
        const auto bad = check_invariants(r.final_state);
        if (!bad.empty()) {
            r.violation = "after event " + std::to_string(i) + ": " + bad.front();
            break;
        }
    }
    return r;
}

std::string effect_log(const std::vector<Effect>& effects) {
    std::string out;
    for (const auto& e : effects) {
        out += effect_line(e);
        out += '\n';
    }
    return out;
}

std::vector<std::string> audit_effects(const std::vector<Effect>& effects, int initial_lives, int final_lives) {
    std::vector<std::string> bad;
    int lives = initial_lives;
    std::optional<PrimeInterval> before_last, last;
    const Effect* prev = nullptr;
    for (const auto& e : effects) {
        const std::string at = " at move " + std::to_string(e.move);
        if (e.kind == "life_gained") {
            const bool known = (e.cause == "bonus" || e.cause == "adventure") && e.amount > 0;
            if (!known) bad.push_back("life gained for unknown cause" + at);
            lives += e.amount;
        } else if (e.kind == "life_lost") {
            const bool known = (e.cause == "stuck" || e.cause == "adventure_failed") && e.amount == 1;
            if (!known) bad.push_back("life lost for unknown cause" + at);
            lives -= e.amount;
        } else if (e.kind == "board_replaced") {
            if (!prev || prev->kind != "life_lost") bad.push_back("board replaced without a lost life" + at);
            before_last.reset();
            last.reset();
        } else if (e.kind == "start_chosen") {
            before_last.reset();
            last = e.edge;
        } else if (e.kind == "moved") {
            if (before_last && e.edge == before_last) bad.push_back("monkey moved straight back" + at);
            before_last = last;
            last = e.edge;
        }
        if (e.kind == "life_gained" || e.kind == "life_lost")
            if (lives != e.lives) bad.push_back("logged lives disagree with the ledger" + at);
        prev = &e;
    }
    if (lives != final_lives) bad.push_back("ledger ends at " + std::to_string(lives) + " but the game has " +
                                            std::to_string(final_lives) + " lives");
    return bad;
}

} // namespace swinglat
