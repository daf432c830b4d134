#include "swinglat/session.hpp"

#include <string>

namespace swinglat {

Json error_message(std::string_view reason) { return Json{{"type", "error"}, {"reason", reason}}; }

Session::Session(GameConfig config) : config_(config), state_(new_game(config)) {}

Json Session::snapshot_message() const {
    Json j = snapshot_to_json(snapshot(state_));
    j["type"] = "snapshot";
    return j;
}

std::vector<Json> Session::apply(const GameEvent& event) {
    auto t = handle_event(state_, event);
    std::vector<Json> replies;
    bool changed = false;
    for (const auto& e : t.effects) {
        if (e.kind == "rejected") {
            replies.push_back(error_message(e.cause));
            continue;
        }
        Json j = effect_to_json(e);
        j["type"] = "effect";
        replies.push_back(std::move(j));
        changed = true;
    }
    const bool accepted = t.state.sequence != state_.sequence;
    state_ = std::move(t.state);
    if (changed || (accepted && !std::holds_alternative<Tick>(event))) replies.push_back(snapshot_message());
    return replies;
}

std::vector<Json> Session::handle_message(std::string_view text) {
    const Json msg = Json::parse(text, nullptr, false);
    if (msg.is_discarded() || !msg.is_object()) return {error_message("message is not a JSON object")};
    if (!msg.contains("type") || !msg["type"].is_string()) return {error_message("message has no type")};
    const auto type = msg["type"].get<std::string>();
    try {
        if (type == "click_cell") {
            if (!msg.contains("cell")) return {error_message("click_cell needs a cell")};
            return apply(ClickCell{cell_from_json(msg["cell"])});
        }
        if (type == "choose_start") {
            if (!msg.contains("edge")) return {error_message("choose_start needs an edge")};
            return apply(ChooseStartEdge{edge_from_json(msg["edge"])});
        }
        if (type == "new_game") {
            GameConfig next = config_;
            next.rng_seed = config_.rng_seed + games_started_;
            if (msg.contains("config") && !msg["config"].is_null()) next = config_from_json(msg["config"], next);
            state_ = new_game(next);
            ++games_started_;
            return {snapshot_message()};
        }
    } catch (const ArgumentError& e) {
        return {error_message(e.what())};
    } catch (const GenerationError& e) {
        return {error_message(e.what())};
    }
    return {error_message("unknown message type " + type)};
}

std::vector<Json> Session::advance(std::int64_t ms) {
    if (ms <= 0 || state_.phase == Phase::GameOver) return {};
    return apply(Tick{ms});
}

std::optional<std::int64_t> Session::ms_until_deadline() const {
    switch (state_.phase) {
    case Phase::ChoosingStart:
        return std::max<std::int64_t>(0, state_.phase_started_ms + state_.config.start_choice_ms - state_.clock_ms);
    case Phase::Running: return std::max<std::int64_t>(0, state_.next_move_ms - state_.clock_ms);
    case Phase::GameOver: return std::nullopt;
    }
    return std::nullopt;
}

} // namespace swinglat
