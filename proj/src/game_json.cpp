#include "swinglat/game_json.hpp"

#include <array>
#include <string>

namespace swinglat {

namespace {

void require(bool condition, const std::string& what) {
    if (!condition) throw ArgumentError("malformed JSON: " + what);
}

template <class T>
T field(const Json& j, const char* key) {
    require(j.is_object() && j.contains(key), std::string("missing field ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ArgumentError(std::string("malformed JSON: bad field ") + key);
    }
}

template <class T, class F>
std::optional<T> optional_field(const Json& j, const char* key, F parse) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return parse(j[key]);
}

Phase parse_phase(const std::string& name) {
    for (Phase p : {Phase::ChoosingStart, Phase::Running, Phase::GameOver})
        if (to_string(p) == name) return p;
    throw ArgumentError("malformed JSON: unknown phase " + name);
}

FeatureKind parse_feature(const std::string& name) {
    for (FeatureKind k : {FeatureKind::Bonus, FeatureKind::Candidate, FeatureKind::Adventure})
        if (to_string(k) == name) return k;
    throw ArgumentError("malformed JSON: unknown feature " + name);
}

template <class T>
Json or_null(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json edge_or_null(const std::optional<PrimeInterval>& e) { return e ? edge_to_json(*e) : Json(nullptr); }
Json cell_or_null(const std::optional<FourCell>& c) { return c ? cell_to_json(*c) : Json(nullptr); }

} // namespace

Json config_to_json(const GameConfig& c) {
    return Json{{"board_length", c.board_length},
                {"initial_lives", c.initial_lives},
                {"start_choice_ms", c.start_choice_ms},
                {"bonus_window_moves", c.bonus_window_moves},
                {"candidate_window_moves", c.candidate_window_moves},
                {"adventure_window_moves", c.adventure_window_moves},
                {"bonus_reward_lives", c.bonus_reward_lives},
                {"adventure_reward_lives", c.adventure_reward_lives},
                {"initial_move_period_ms", c.initial_move_period_ms},
                {"speedup_factor_per_move", {c.speedup_numerator, c.speedup_denominator}},
                {"min_move_period_ms", c.min_move_period_ms},
                {"bonus_spawn_probability", c.bonus_spawn_probability},
                {"candidate_spawn_probability", c.candidate_spawn_probability},
                {"replace_board_on_any_life_loss", c.replace_board_on_any_life_loss},
                {"min_cells", c.min_cells},
                {"rng_seed", c.rng_seed}};
}

GameConfig config_from_json(const Json& j, GameConfig c) {
    require(j.is_object(), "config must be an object");
    for (const auto& [key, value] : j.items()) {
        if (key == "board_length") c.board_length = field<int>(j, "board_length");
        else if (key == "initial_lives") c.initial_lives = field<int>(j, "initial_lives");
        else if (key == "start_choice_ms") c.start_choice_ms = field<int>(j, "start_choice_ms");
        else if (key == "bonus_window_moves") c.bonus_window_moves = field<int>(j, "bonus_window_moves");
        else if (key == "candidate_window_moves") c.candidate_window_moves = field<int>(j, "candidate_window_moves");
        else if (key == "adventure_window_moves") c.adventure_window_moves = field<int>(j, "adventure_window_moves");
        else if (key == "bonus_reward_lives") c.bonus_reward_lives = field<int>(j, "bonus_reward_lives");
        else if (key == "adventure_reward_lives") c.adventure_reward_lives = field<int>(j, "adventure_reward_lives");
        else if (key == "initial_move_period_ms") c.initial_move_period_ms = field<int>(j, "initial_move_period_ms");
        else if (key == "speedup_factor_per_move") {
            const auto f = field<std::array<int, 2>>(j, "speedup_factor_per_move");
            c.speedup_numerator = f[0];
            c.speedup_denominator = f[1];
        } else if (key == "min_move_period_ms") c.min_move_period_ms = field<int>(j, "min_move_period_ms");
        else if (key == "bonus_spawn_probability") c.bonus_spawn_probability = field<double>(j, "bonus_spawn_probability");
        else if (key == "candidate_spawn_probability")
            c.candidate_spawn_probability = field<double>(j, "candidate_spawn_probability");
        else if (key == "replace_board_on_any_life_loss")
            c.replace_board_on_any_life_loss = field<bool>(j, "replace_board_on_any_life_loss");
        else if (key == "min_cells") c.min_cells = field<int>(j, "min_cells");
        else if (key == "rng_seed") c.rng_seed = field<std::uint64_t>(j, "rng_seed");
        else throw ArgumentError("malformed JSON: unknown config key " + key);
    }
    c.validate();
    return c;
}

namespace {

template <class J>
J effect_object(const Effect& e) {
    J j;
    j["move"] = e.move;
    j["effect"] = e.kind;
    if (e.edge) j["edge"] = edge_to_json(*e.edge);
    if (e.cell) j["cell"] = cell_to_json(*e.cell);
    if (e.feature) j["feature"] = to_string(*e.feature);
    if (!e.cause.empty()) j["cause"] = e.cause;
    if (e.amount != 0) j["amount"] = e.amount;
    j["lives"] = e.lives;
    return j;
}

} // namespace

Json effect_to_json(const Effect& e) { return effect_object<Json>(e); }

std::string effect_line(const Effect& e) { return effect_object<nlohmann::ordered_json>(e).dump(); }

Effect effect_from_json(const Json& j) {
    Effect e;
    e.move = field<long>(j, "move");
    e.kind = field<std::string>(j, "effect");
    e.edge = optional_field<PrimeInterval>(j, "edge", edge_from_json);
    e.cell = optional_field<FourCell>(j, "cell", cell_from_json);
    e.feature = optional_field<FeatureKind>(j, "feature", [](const Json& v) {
        require(v.is_string(), "feature");
        return parse_feature(v.get<std::string>());
    });
    if (j.contains("cause")) e.cause = field<std::string>(j, "cause");
    if (j.contains("amount")) e.amount = field<int>(j, "amount");
    e.lives = field<int>(j, "lives");
    return e;
}

Json snapshot_to_json(const Snapshot& s) {
    Json edges = Json::array();
    for (const auto& e : s.edges)
        edges.push_back({{"edge", edge_to_json(e.edge)}, {"tag", e.is_new ? "new" : "old"}});
    Json cells = Json::array();
    for (const auto& c : s.cells) cells.push_back(cell_to_json(c));
    Json features = Json::array();
    for (const auto& f : s.features)
        features.push_back({{"kind", to_string(f.kind)},
                            {"color", feature_color(f.kind)},
                            {"cell", cell_to_json(f.cell)},
                            {"moves_left", f.moves_left}});
    return Json{{"seq", s.sequence},
                {"phase", to_string(s.phase)},
                {"lives", s.lives},
                {"move_count", s.move_count},
                {"move_period_ms", s.move_period_ms},
                {"clock_ms", s.clock_ms},
                {"start_deadline_ms", or_null(s.start_deadline_ms)},
                {"next_move_ms", or_null(s.next_move_ms)},
                {"board_number", s.board_number},
                {"diagram", diagram_to_json(s.board)},
                {"edges", edges},
                {"cells", cells},
                {"eye", {{"cell", cell_or_null(s.eye_cell)},
                         {"element", or_null(s.eye_element)},
                         {"pending_cell", cell_or_null(s.pending_eye_cell)}}},
                {"monkey", {{"current", edge_or_null(s.monkey_current)},
                            {"previous", edge_or_null(s.monkey_previous)},
                            {"highlight", "red"}}},
                {"features", features}};
}

Snapshot snapshot_from_json(const Json& j) {
    require(j.is_object(), "snapshot must be an object");
    auto int64 = [](const Json& v) {
        require(v.is_number_integer(), "integer field");
        return v.get<std::int64_t>();
    };
    require(j.contains("diagram"), "missing field diagram");
    Snapshot s{field<long>(j, "seq"),
               parse_phase(field<std::string>(j, "phase")),
               field<int>(j, "lives"),
               field<long>(j, "move_count"),
               field<int>(j, "move_period_ms"),
               field<std::int64_t>(j, "clock_ms"),
               optional_field<std::int64_t>(j, "start_deadline_ms", int64),
               optional_field<std::int64_t>(j, "next_move_ms", int64),
               field<int>(j, "board_number"),
               diagram_from_json(j["diagram"]),
               {}, {}, {}, {}, {}, {}, {}, {}};
    for (const auto& e : field<Json>(j, "edges")) {
        const auto tag = field<std::string>(e, "tag");
        require(tag == "old" || tag == "new", "edge tag");
        s.edges.push_back({edge_from_json(field<Json>(e, "edge")), tag == "new"});
    }
    for (const auto& c : field<Json>(j, "cells")) s.cells.push_back(cell_from_json(c));
    const auto eye = field<Json>(j, "eye");
    s.eye_cell = optional_field<FourCell>(eye, "cell", cell_from_json);
    s.eye_element = optional_field<ElementId>(eye, "element", [](const Json& v) {
        require(v.is_number_integer(), "eye element");
        return v.get<ElementId>();
    });
    s.pending_eye_cell = optional_field<FourCell>(eye, "pending_cell", cell_from_json);
    const auto monkey = field<Json>(j, "monkey");
    s.monkey_current = optional_field<PrimeInterval>(monkey, "current", edge_from_json);
    s.monkey_previous = optional_field<PrimeInterval>(monkey, "previous", edge_from_json);
    for (const auto& f : field<Json>(j, "features"))
        s.features.push_back({parse_feature(field<std::string>(f, "kind")), cell_from_json(field<Json>(f, "cell")),
                              field<int>(f, "moves_left")});
    return s;
}

} // namespace swinglat
