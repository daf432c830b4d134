#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "golden.hpp"
#include "swinglat/game.hpp"
#include "swinglat/game_json.hpp"
#include "swinglat/simulation.hpp"

using namespace swinglat;
using namespace fixtures;

namespace {

// No random feature spawns, so scenarios stay exactly as constructed.
GameConfig quiet(std::uint64_t seed = 1) {
    GameConfig c;
    c.rng_seed = seed;
    c.bonus_spawn_probability = 0;
    c.candidate_spawn_probability = 0;
    return c;
}

// A game whose base board is S7. S7 is not a good board, so invariant
// checks do not apply to these states.
GameState on_s7(GameConfig c = quiet()) {
    GameState s = new_game(c);
    s.base = layout(s7());
    s.board = s.base;
    s.analysis = std::make_shared<const SwingAnalysis>(s.board);
    return s;
}

GameState apply(GameState s, const GameEvent& e, std::vector<Effect>* effects = nullptr) {
    auto t = handle_event(std::move(s), e);
    if (effects) effects->insert(effects->end(), t.effects.begin(), t.effects.end());
    return std::move(t.state);
}

GameState started(GameState s, PrimeInterval e) { return apply(std::move(s), ChooseStartEdge{e}); }

bool has_effect(const std::vector<Effect>& effects, std::string_view kind) {
    return std::any_of(effects.begin(), effects.end(), [&](const Effect& e) { return e.kind == kind; });
}

void require_consistent(const GameState& s) {
    const auto bad = check_invariants(s);
    CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
}

} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(GameConfig{}.validate());
    GameConfig c;
    c.bonus_window_moves = 0;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = {};
    c.speedup_numerator = 1001;
    CHECK_THROWS_AS(c.validate(), ArgumentError);
    c = {};
    c.min_move_period_ms = -1;
    CHECK_THROWS_AS(new_game(c), ArgumentError);
}

TEST_CASE("new game") {
    const GameState s = new_game(GameConfig{});
    CHECK(s.phase == Phase::ChoosingStart);
    CHECK(s.lives == 3);
    CHECK(is_good(s.base));
    CHECK(s.base.length() == 6);
    CHECK(s.base.layout().has_value());
    CHECK_FALSE(s.eye_cell);
    CHECK_FALSE(s.monkey_current);
    require_consistent(s);

    const Snapshot snap = snapshot(s);
    CHECK(snap == snapshot(new_game(GameConfig{})));
    CHECK_FALSE(snap.eye_cell);
    CHECK_FALSE(snap.monkey_current);
    CHECK(snap.phase == Phase::ChoosingStart);
    CHECK(snap.start_deadline_ms == 3000);

    GameConfig other;
    other.rng_seed = 2;
    CHECK_FALSE(snapshot(new_game(other)) == snap);
}

TEST_CASE("start edge") {
    SUBCASE("player choice") {
        std::vector<Effect> fx;
        const GameState s = apply(on_s7(), ChooseStartEdge{{xl, a}}, &fx);
        CHECK(s.phase == Phase::Running);
        CHECK(s.monkey_current == PrimeInterval{xl, a});
        REQUIRE(fx.size() == 1);
        CHECK(fx[0].kind == "start_chosen");
        CHECK(fx[0].cause == "player");
    }

    SUBCASE("timeout picks a seeded edge") {
        std::vector<Effect> fx;
        const GameState s = apply(new_game(quiet()), Tick{3001}, &fx);
        CHECK(s.phase == Phase::Running);
        REQUIRE(s.monkey_current);
        CHECK(s.board.is_edge(*s.monkey_current));
        REQUIRE_FALSE(fx.empty());
        CHECK(fx[0].cause == "timeout");
        CHECK(s.clock_ms == 3001);
        CHECK(s.next_move_ms == 3000 + 1000);
        const GameState again = apply(new_game(quiet()), Tick{3001});
        CHECK(again.monkey_current == s.monkey_current);
    }

    SUBCASE("window still open") {
        const GameState s = apply(new_game(quiet()), Tick{2999});
        CHECK(s.phase == Phase::ChoosingStart);
        CHECK(apply(s, Tick{1}).phase == Phase::Running);
    }

    SUBCASE("rejections leave the state alone") {
        const GameState s = on_s7();
        auto t = handle_event(s, ChooseStartEdge{{0, a}});
        REQUIRE(t.effects.size() == 1);
        CHECK(t.effects[0].kind == "rejected");
        CHECK(snapshot(t.state) == snapshot(s));
        t = handle_event(s, ChooseStartEdge{{0, 99}});
        CHECK(t.effects[0].kind == "rejected");
        const GameState running = started(s, {xl, a});
        CHECK(handle_event(running, ChooseStartEdge{{xr, b}}).effects[0].kind == "rejected");
        CHECK(handle_event(running, Tick{-5}).effects[0].kind == "rejected");
    }
}

TEST_CASE("legal moves") {
    SUBCASE("backtrack excluded") {
        GameState s = started(on_s7(), {m, top});
        s.monkey_previous = PrimeInterval{xl, a};
        CHECK(legal_moves(s) == std::vector<PrimeInterval>{{xr, b}});
    }
    SUBCASE("boundary edge with its only target excluded") {
        GameState s = started(on_s7(), {0, xl});
        CHECK(legal_moves(s) == std::vector<PrimeInterval>{{xr, m}});
        s.monkey_previous = PrimeInterval{xr, m};
        CHECK(legal_moves(s).empty());
    }
    SUBCASE("fresh monkey sees every target") {
        const GameState s = started(on_s7(), {a, top});
        auto moves = legal_moves(s);
        std::sort(moves.begin(), moves.end());
        CHECK(moves == std::vector<PrimeInterval>{{xl, m}, {m, top}});
    }
}

TEST_CASE("monkey steps") {
    SUBCASE("move and speed-up") {
        std::vector<Effect> fx;
        const GameState s = apply(started(on_s7(), {xl, a}), Tick{1000}, &fx);
        CHECK(s.move_count == 1);
        CHECK(s.monkey_current == PrimeInterval{m, top});
        CHECK(s.monkey_previous == PrimeInterval{xl, a});
        CHECK(s.move_period_ms == 995);
        CHECK(s.next_move_ms == 1000 + 995);
        CHECK(has_effect(fx, "moved"));
    }

    SUBCASE("period floor") {
        GameState s = started(on_s7(), {xl, a});
        s.move_period_ms = 251;
        s = step_monkey(std::move(s)).state;
        CHECK(s.move_period_ms == 250);
        s = step_monkey(std::move(s)).state;
        CHECK(s.move_period_ms == 250);
    }

    SUBCASE("stuck costs a life and the board") {
        GameState s = started(on_s7(), {0, xl});
        s.monkey_previous = PrimeInterval{xr, m};
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 2);
        CHECK(t.state.phase == Phase::ChoosingStart);
        CHECK(t.state.board_number == s.board_number + 1);
        CHECK(is_good(t.state.base));
        CHECK_FALSE(t.state.monkey_current);
        REQUIRE(t.effects.size() == 2);
        CHECK(t.effects[0].kind == "life_lost");
        CHECK(t.effects[0].cause == "stuck");
        CHECK(t.effects[1].kind == "board_replaced");
        require_consistent(t.state);
    }

    SUBCASE("last life ends the game") {
        GameState s = started(on_s7(), {0, xl});
        s.monkey_previous = PrimeInterval{xr, m};
        s.lives = 1;
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 0);
        CHECK(t.state.phase == Phase::GameOver);
        CHECK(t.effects.back().kind == "game_over");
        CHECK(handle_event(t.state, Tick{1000}).effects[0].kind == "rejected");
        CHECK(handle_event(t.state, ClickCell{{0, xl, xr, m}}).effects[0].kind == "rejected");
    }

    SUBCASE("requires a running game") { CHECK_THROWS_AS(step_monkey(on_s7()), ArgumentError); }
}

TEST_CASE("feature cells") {
    const FourCell left{xl, a, m, top};

    SUBCASE("bonus won on the last move of its window") {
        GameState s = started(on_s7(), {xl, a});
        s.bonus = FeatureCell{left, 1};
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 4);
        CHECK_FALSE(t.state.bonus);
        CHECK(has_effect(t.effects, "feature_resolved"));
        CHECK(t.effects.back().kind == "life_gained");
        CHECK(t.effects.back().cause == "bonus");
    }

    SUBCASE("bonus window closes") {
        GameState s = started(on_s7(), {0, xl});
        s.bonus = FeatureCell{left, 1};  // [0,xl] -> [xr,m] is not in this cell
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 3);
        CHECK_FALSE(t.state.bonus);
        CHECK(has_effect(t.effects, "feature_expired"));
    }

    SUBCASE("bonus countdown") {
        GameState s = started(on_s7(), {0, xl});
        s.bonus = FeatureCell{left, 10};
        const auto t = step_monkey(s);
        REQUIRE(t.state.bonus);
        CHECK(t.state.bonus->moves_left == 9);
    }

    SUBCASE("candidate accepted becomes an adventure") {
        GameState s = started(on_s7(), {0, xl});
        s.candidate = FeatureCell{left, 2};
        std::vector<Effect> fx;
        s = apply(s, ClickCell{left}, &fx);
        CHECK_FALSE(s.candidate);
        REQUIRE(s.adventure);
        CHECK(s.adventure->moves_left == 20);
        CHECK(s.adventure->cell == left);
        CHECK_FALSE(s.eye_cell);  // not an eye request
        CHECK(fx.at(0).kind == "feature_accepted");
    }

    SUBCASE("candidate expires silently") {
        GameState s = started(on_s7(), {0, xl});
        s.candidate = FeatureCell{left, 1};
        const auto t = step_monkey(s);
        CHECK_FALSE(t.state.candidate);
        CHECK(t.state.lives == 3);
        CHECK(t.effects.size() == 1);  // just the move
    }

    SUBCASE("adventure success") {
        GameState s = started(on_s7(), {xl, a});
        s.adventure = FeatureCell{left, 20};
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 5);
        CHECK_FALSE(t.state.adventure);
        CHECK(t.effects.back().cause == "adventure");
    }

    SUBCASE("adventure failure") {
        GameState s = started(on_s7(), {0, xl});
        s.adventure = FeatureCell{left, 1};
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 2);
        CHECK_FALSE(t.state.adventure);
        CHECK(has_effect(t.effects, "feature_expired"));
        CHECK(has_effect(t.effects, "life_lost"));
        CHECK(t.effects.back().kind == "board_replaced");
        CHECK(t.state.phase == Phase::ChoosingStart);
    }

    SUBCASE("adventure failure on the same board when configured") {
        GameConfig c = quiet();
        c.replace_board_on_any_life_loss = false;
        GameState s = started(on_s7(c), {0, xl});
        s.adventure = FeatureCell{left, 1};
        const auto t = step_monkey(s);
        CHECK(t.state.lives == 2);
        CHECK(t.state.phase == Phase::Running);
        CHECK(t.state.board_number == s.board_number);
        CHECK_FALSE(has_effect(t.effects, "board_replaced"));
    }

    SUBCASE("tilts do not count") {
        // In M3, [0,a3] tilts to [0,a2] inside cell (0,a2,a3,1).
        GameState s = new_game(quiet());
        s.base = layout(grid(2, 2));
        s = apply(s, ClickCell{{0, 1, 2, 3}});  // board becomes M3 with eye 4 between 1 and 2
        s = started(s, {0, 2});
        s.monkey_previous = PrimeInterval{4, 3};
        s.bonus = FeatureCell{{0, 4, 2, 3}, 5};
        const auto moves = legal_moves(s);
        REQUIRE(std::find(moves.begin(), moves.end(), PrimeInterval{0, 4}) != moves.end());
        bool checked = false;
        for (int seed = 0; seed < 40 && !checked; ++seed) {
            GameState trial = s;
            trial.rng = Rng(static_cast<std::uint64_t>(seed));
            const auto t = step_monkey(trial);
            if (t.state.monkey_current != PrimeInterval{0, 4}) continue;
            CHECK(t.state.lives == 3);
            CHECK(t.state.bonus);
            checked = true;
        }
        CHECK(checked);
    }
}

TEST_CASE("eye changes") {
    GameState s = new_game(quiet(5));
    const auto cells = enumerate_cells(s.base);
    REQUIRE(cells.size() >= 2);

    SUBCASE("immediate while stationary") {
        std::vector<Effect> fx;
        s = apply(s, ClickCell{cells[0]}, &fx);
        CHECK(s.eye_cell == cells[0]);
        CHECK(s.eye_element == s.base.size());
        CHECK(s.board.edges().size() == s.base.edges().size() + 2);
        CHECK(fx.at(0).kind == "eye_changed");
        require_consistent(s);

        const Snapshot snap = snapshot(s);
        CHECK(std::count_if(snap.edges.begin(), snap.edges.end(), [](const SnapshotEdge& e) { return e.is_new; }) == 2);

        // Moving the eye drops the old one.
        s = apply(s, ClickCell{cells[1]}, &fx);
        CHECK(s.eye_cell == cells[1]);
        CHECK(eyes(s.board).size() == 1);
        require_consistent(s);
    }

    SUBCASE("clicking the eye's own cells changes nothing") {
        s = apply(s, ClickCell{cells[0]});
        const FourCell half{cells[0].bottom, cells[0].left_mid, *s.eye_element, cells[0].top};
        std::vector<Effect> fx;
        const GameState after = apply(s, ClickCell{half}, &fx);
        CHECK(fx.empty());
        CHECK(after.board == s.board);
        CHECK(apply(s, ClickCell{cells[0]}).board == s.board);
    }

    SUBCASE("delayed while the monkey is on a new edge") {
        s = apply(s, ClickCell{cells[0]});
        const ElementId eye = *s.eye_element;
        s = started(s, {cells[0].bottom, eye});
        std::vector<Effect> fx;
        s = apply(s, ClickCell{cells[1]}, &fx);
        CHECK(s.pending_eye_cell == cells[1]);
        CHECK(s.eye_cell == cells[0]);
        CHECK(fx.at(0).kind == "eye_pending");
        require_consistent(s);

        // Keep stepping: the change lands exactly when an old edge is reached.
        for (int i = 0; i < 50 && s.phase == Phase::Running && s.pending_eye_cell; ++i) {
            const auto t = step_monkey(s);
            s = t.state;
            require_consistent(s);
            if (s.phase != Phase::Running) break;
            if (s.pending_eye_cell) {
                CHECK_FALSE(s.is_old_edge(*s.monkey_current));
            } else {
                CHECK(s.is_old_edge(*s.monkey_current));
                CHECK(s.eye_cell == cells[1]);
                CHECK(has_effect(t.effects, "eye_changed"));
            }
        }
    }

    SUBCASE("features on vanished cells are cancelled") {
        s = apply(s, ClickCell{cells[0]});
        const FourCell half{cells[0].bottom, cells[0].left_mid, *s.eye_element, cells[0].top};
        s.bonus = FeatureCell{half, 5};
        std::vector<Effect> fx;
        s = apply(s, ClickCell{cells[1]}, &fx);
        CHECK_FALSE(s.bonus);
        CHECK(has_effect(fx, "feature_cancelled"));
        require_consistent(s);
    }

    SUBCASE("malformed cells are rejected") {
        const auto t = handle_event(s, ClickCell{{0, 1, 2, 999}});
        REQUIRE(t.effects.size() == 1);
        CHECK(t.effects[0].kind == "rejected");
        CHECK(snapshot(t.state) == snapshot(s));
    }
}

TEST_CASE("autoplayer") {
    SUBCASE("starts off the boundary") {
        const GameState s = new_game(GameConfig{});
        Autoplayer p(1);
        const GameEvent e = p.next_event(s);
        REQUIRE(std::holds_alternative<ChooseStartEdge>(e));
        const auto edge = std::get<ChooseStartEdge>(e).edge;
        const auto boundary = boundary_edges(s.board);
        CHECK(s.board.is_edge(edge));
        CHECK(std::find(boundary.begin(), boundary.end(), edge) == boundary.end());
    }

    SUBCASE("always takes candidates") {
        GameState s = started(new_game(GameConfig{}), new_game(GameConfig{}).board.edges()[0]);
        s.candidate = FeatureCell{s.analysis->cells()[0], 3};
        Autoplayer p(1);
        const GameEvent e = p.next_event(s);
        REQUIRE(std::holds_alternative<ClickCell>(e));
        CHECK(std::get<ClickCell>(e).cell == s.candidate->cell);
    }

    SUBCASE("otherwise waits for the next move") {
        GameState s = started(on_s7(), {m, top});
        Autoplayer p(1);
        const GameEvent e = p.next_event(s);
        REQUIRE(std::holds_alternative<Tick>(e));
        CHECK(std::get<Tick>(e).ms == 1000);
    }

    SUBCASE("long runs keep every invariant") {
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const auto r = simulate(GameConfig{.rng_seed = seed}, 10000, seed);
            CHECK_MESSAGE(!r.violation, *r.violation);
            CHECK(r.events == 10000);
            CHECK(audit_effects(r.effects, 3, r.final_state.lives).empty());
        }
    }
}

TEST_CASE("replay determinism") {
    const auto a1 = simulate(GameConfig{}, 1500, 9);
    const auto a2 = simulate(GameConfig{}, 1500, 9);
    CHECK(effect_log(a1.effects) == effect_log(a2.effects));
    CHECK(snapshot(a1.final_state) == snapshot(a2.final_state));

    // Folding the recorded events one at a time gives the same snapshots.
    GameState s = new_game(GameConfig{});
    Autoplayer p(9);
    std::vector<GameEvent> events;
    for (int i = 0; i < 300; ++i) {
        events.push_back(p.next_event(s));
        s = handle_event(s, events.back()).state;
    }
    GameState replay = new_game(GameConfig{});
    for (const auto& e : events) replay = handle_event(replay, e).state;
    CHECK(snapshot(replay) == snapshot(s));
}

TEST_CASE("effect log audit") {
    std::vector<Effect> fx{{.move = 1, .kind = "life_lost", .cause = "stuck", .amount = 1, .lives = 2},
                           {.move = 1, .kind = "board_replaced", .cause = "stuck", .lives = 2}};
    CHECK(audit_effects(fx, 3, 2).empty());
    CHECK_FALSE(audit_effects(fx, 3, 3).empty());
    fx.erase(fx.begin());
    CHECK_FALSE(audit_effects(fx, 3, 3).empty());  // replacement without a lost life

    const std::vector<Effect> back{{.move = 1, .kind = "moved", .edge = PrimeInterval{0, 1}},
                                   {.move = 2, .kind = "moved", .edge = PrimeInterval{2, 3}},
                                   {.move = 3, .kind = "moved", .edge = PrimeInterval{0, 1}}};
    CHECK(audit_effects(back, 3, 3).size() == 1);
}

TEST_CASE("JSON forms") {
    const auto r = simulate(GameConfig{}, 400, 4);
    for (const auto& e : r.effects) {
        CHECK(effect_from_json(effect_to_json(e)) == e);
        CHECK(effect_from_json(Json::parse(effect_line(e))) == e);
    }
    CHECK(effect_line(r.effects.front()).rfind("{\"move\":", 0) == 0);

    GameState s = r.final_state;
    if (s.phase == Phase::ChoosingStart) s = apply(s, Tick{3000});
    s = apply(s, ClickCell{enumerate_cells(s.base)[0]});
    const Snapshot snap = snapshot(s);
    CHECK(snapshot_from_json(Json::parse(snapshot_to_json(snap).dump())) == snap);
    CHECK(snapshot_from_json(snapshot_to_json(snapshot(new_game(GameConfig{})))) == snapshot(new_game(GameConfig{})));

    const Json j = snapshot_to_json(snap);
    CHECK(j["monkey"]["highlight"] == "red");
    CHECK(j["diagram"]["layout"].is_array());

    GameConfig c;
    c.board_length = 7;
    c.speedup_numerator = 99;
    c.speedup_denominator = 100;
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK(config_from_json(Json{{"initial_lives", 5}}).initial_lives == 5);
    CHECK_THROWS_AS(config_from_json(Json{{"lives", 5}}), ArgumentError);
    CHECK_THROWS_AS(config_from_json(Json{{"initial_lives", "x"}}), ArgumentError);
    CHECK_THROWS_AS(snapshot_from_json(Json{{"seq", 1}}), ArgumentError);
}

TEST_CASE("feature colours") {
    CHECK(feature_color(FeatureKind::Bonus) == "grey");
    CHECK(feature_color(FeatureKind::Candidate) == "blue");
    CHECK(feature_color(FeatureKind::Adventure) == "purple");
}

TEST_CASE("seeded autoplay log") {
    GameConfig c;
    c.rng_seed = 1;
    const auto r = simulate(c, 1000, 1);
    CHECK(golden::matches("simulate_seed1_1000.jsonl", effect_log(r.effects)));
}
