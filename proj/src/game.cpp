#include "swinglat/game.hpp"

#include <algorithm>
#include <string>

namespace swinglat {

void GameConfig::validate() const {
    auto positive = [](int v, const char* name) {
        if (v <= 0) throw ArgumentError(std::string("game config: ") + name + " must be positive");
    };
    positive(board_length, "board_length");
    positive(initial_lives, "initial_lives");
    positive(start_choice_ms, "start_choice_ms");
    positive(bonus_window_moves, "bonus_window_moves");
    positive(candidate_window_moves, "candidate_window_moves");
    positive(adventure_window_moves, "adventure_window_moves");
    positive(initial_move_period_ms, "initial_move_period_ms");
    positive(min_move_period_ms, "min_move_period_ms");
    positive(speedup_denominator, "speedup_denominator");
    if (board_length < 3) throw ArgumentError("game config: board_length must be at least 3");
    if (speedup_numerator <= 0 || speedup_numerator > speedup_denominator)
        throw ArgumentError("game config: speedup factor must lie in (0, 1]");
    if (bonus_reward_lives < 0 || adventure_reward_lives < 0)
        throw ArgumentError("game config: rewards must be non-negative");
    for (double p : {bonus_spawn_probability, candidate_spawn_probability})
        if (!(p >= 0 && p <= 1)) throw ArgumentError("game config: spawn probabilities must lie in [0, 1]");
}

std::string_view to_string(Phase phase) {
    switch (phase) {
    case Phase::ChoosingStart: return "choosing_start";
    case Phase::Running: return "running";
    case Phase::GameOver: return "game_over";
    }
    return "?";
}

std::string_view to_string(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Bonus: return "bonus";
    case FeatureKind::Candidate: return "candidate";
    case FeatureKind::Adventure: return "adventure";
    }
    return "?";
}

std::string_view feature_color(FeatureKind kind) {
    switch (kind) {
    case FeatureKind::Bonus: return "grey";
    case FeatureKind::Candidate: return "blue";
    case FeatureKind::Adventure: return "purple";
    }
    return "?";
}

namespace {

Diagram placeholder() { return chain(1); }

Effect effect(const GameState& s, std::string kind) {
    Effect e;
    e.move = s.move_count;
    e.kind = std::move(kind);
    e.lives = s.lives;
    return e;
}

Effect rejected(const GameState& s, std::string reason) {
    Effect e = effect(s, "rejected");
    e.cause = std::move(reason);
    return e;
}

bool contains(const std::vector<FourCell>& cells, const FourCell& c) {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
}

void set_board(GameState& s, Diagram board) {
    s.analysis = std::make_shared<const SwingAnalysis>(board);
    s.board = std::move(board);
}

void install_base(GameState& s) {
    GoodnessCriteria criteria;
    criteria.min_cells = s.config.min_cells;
    s.base = layout(random_good(s.config.board_length, s.rng, criteria).diagram);
    s.eye_cell.reset();
    s.eye_element.reset();
    s.pending_eye_cell.reset();
    s.monkey_current.reset();
    s.monkey_previous.reset();
    s.bonus.reset();
    s.candidate.reset();
    s.adventure.reset();
    set_board(s, s.base);
    s.phase = Phase::ChoosingStart;
    s.phase_started_ms = s.clock_ms;
    ++s.board_number;
}

// Replaces the current eye (if any) by one in `cell`, a cell of L.
void apply_eye(GameState& s, const FourCell& cell, std::vector<Effect>& out) {
    s.pending_eye_cell.reset();
    if (s.eye_cell == cell) return;
    auto inserted = add_eye(s.base, cell);
    s.eye_cell = cell;
    s.eye_element = inserted.eye;
    set_board(s, std::move(inserted.diagram));

    Effect changed = effect(s, "eye_changed");
    changed.cell = cell;
    out.push_back(changed);

    const auto& cells = s.analysis->cells();
    auto cancel = [&](std::optional<FeatureCell>& f, FeatureKind kind) {
        if (!f || contains(cells, f->cell)) return;
        Effect e = effect(s, "feature_cancelled");
        e.feature = kind;
        e.cell = f->cell;
        out.push_back(e);
        f.reset();
    };
    cancel(s.bonus, FeatureKind::Bonus);
    cancel(s.candidate, FeatureKind::Candidate);
    cancel(s.adventure, FeatureKind::Adventure);
}

void start(GameState& s, PrimeInterval edge, const char* cause, std::vector<Effect>& out) {
    s.monkey_current = edge;
    s.monkey_previous.reset();
    s.phase = Phase::Running;
    s.phase_started_ms = s.clock_ms;
    s.next_move_ms = s.clock_ms + s.move_period_ms;
    Effect e = effect(s, "start_chosen");
    e.edge = edge;
    e.cause = cause;
    out.push_back(e);
}

// Returns true when the board was replaced or the game ended.
bool lose_life(GameState& s, const char* cause, std::vector<Effect>& out) {
    s.lives -= 1;
    Effect lost = effect(s, "life_lost");
    lost.cause = cause;
    lost.amount = 1;
    out.push_back(lost);
    if (s.lives == 0) {
        s.phase = Phase::GameOver;
        s.pending_eye_cell.reset();
        s.bonus.reset();
        s.candidate.reset();
        s.adventure.reset();
        out.push_back(effect(s, "game_over"));
        return true;
    }
    if (std::string_view(cause) == "stuck" || s.config.replace_board_on_any_life_loss) {
        install_base(s);
        Effect replaced = effect(s, "board_replaced");
        replaced.cause = cause;
        out.push_back(replaced);
        return true;
    }
    return false;
}

void gain_lives(GameState& s, int amount, const char* cause, std::vector<Effect>& out) {
    s.lives += amount;
    Effect e = effect(s, "life_gained");
    e.cause = cause;
    e.amount = amount;
    out.push_back(e);
}

// A step that jumps or swings between two sides of the cell.
bool qualifies(const SwingAnalysis& a, PrimeInterval from, PrimeInterval to, const FourCell& cell) {
    if (!cell.has_side(from) || !cell.has_side(to)) return false;
    for (const Step& st : a.steps(from, SequenceVariant::SL))
        if (st.to == to && (st.kind == StepKind::CellPerspective || st.kind == StepKind::Swing)) return true;
    return false;
}

std::vector<FourCell> free_cells(const GameState& s) {
    std::vector<FourCell> out;
    for (const auto& c : s.analysis->cells()) {
        const bool used = (s.bonus && s.bonus->cell == c) || (s.candidate && s.candidate->cell == c) ||
                          (s.adventure && s.adventure->cell == c);
        if (!used) out.push_back(c);
    }
    return out;
}

void spawn(GameState& s, std::vector<Effect>& out) {
    auto place = [&](std::optional<FeatureCell>& f, FeatureKind kind, int window) {
        const auto cells = free_cells(s);
        if (cells.empty()) return;
        f = FeatureCell{cells[s.rng.uniform(cells.size())], window};
        Effect e = effect(s, "feature_spawned");
        e.feature = kind;
        e.cell = f->cell;
        out.push_back(e);
    };
    if (!s.bonus && s.rng.chance(s.config.bonus_spawn_probability))
        place(s.bonus, FeatureKind::Bonus, s.config.bonus_window_moves);
    if (!s.candidate && !s.adventure && s.rng.chance(s.config.candidate_spawn_probability))
        place(s.candidate, FeatureKind::Candidate, s.config.candidate_window_moves);
}

Transition handle_click(GameState s, const FourCell& c) {
    if (s.phase == Phase::GameOver) return {s, {rejected(s, "game is over")}};
    std::vector<Effect> out;
    if (s.candidate && s.candidate->cell == c) {
        s.adventure = FeatureCell{c, s.config.adventure_window_moves};
        s.candidate.reset();
        Effect e = effect(s, "feature_accepted");
        e.feature = FeatureKind::Adventure;
        e.cell = c;
        out.push_back(e);
        ++s.sequence;
        return {std::move(s), std::move(out)};
    }

    FourCell target = c;
    if (s.eye_element && c.contains(*s.eye_element)) {
        if (!contains(s.analysis->cells(), c)) return {s, {rejected(s, "not a cell of the board")}};
        target = *s.eye_cell;
    } else if (!is_cell(s.base, c)) {
        return {s, {rejected(s, "not a cell of the board")}};
    }

    if (s.monkey_current && !s.is_old_edge(*s.monkey_current)) {
        if (target == s.eye_cell) {
            s.pending_eye_cell.reset();
        } else {
            s.pending_eye_cell = target;
            Effect e = effect(s, "eye_pending");
            e.cell = target;
            out.push_back(e);
        }
    } else {
        apply_eye(s, target, out);
    }
    ++s.sequence;
    return {std::move(s), std::move(out)};
}

Transition handle_start(GameState s, PrimeInterval edge) {
    if (s.phase != Phase::ChoosingStart) return {s, {rejected(s, "not choosing a start edge")}};
    if (edge.lower < 0 || edge.upper < 0 || edge.lower >= s.board.size() || edge.upper >= s.board.size() ||
        !s.board.is_edge(edge))
        return {s, {rejected(s, "not an edge of the board")}};
    std::vector<Effect> out;
    start(s, edge, "player", out);
    ++s.sequence;
    return {std::move(s), std::move(out)};
}

Transition handle_tick(GameState s, std::int64_t ms) {
    if (ms < 0) return {s, {rejected(s, "negative tick")}};
    if (s.phase == Phase::GameOver) return {s, {rejected(s, "game is over")}};
    std::vector<Effect> out;
    const std::int64_t target = s.clock_ms + ms;
    for (;;) {
        if (s.phase == Phase::ChoosingStart) {
            const std::int64_t deadline = s.phase_started_ms + s.config.start_choice_ms;
            if (deadline > target) break;
            s.clock_ms = deadline;
            const auto edges = s.board.edges();
            start(s, edges[s.rng.uniform(edges.size())], "timeout", out);
        } else if (s.phase == Phase::Running) {
            if (s.next_move_ms > target) break;
            s.clock_ms = s.next_move_ms;
            auto step = step_monkey(std::move(s));
            s = std::move(step.state);
            out.insert(out.end(), step.effects.begin(), step.effects.end());
        } else {
            break;
        }
    }
    s.clock_ms = target;
    ++s.sequence;
    return {std::move(s), std::move(out)};
}

} // namespace

GameState new_game(const GameConfig& config) {
    config.validate();
    GameState s{config, placeholder(), placeholder(), nullptr, {}, {}, {}, {}, {}, Phase::ChoosingStart,
                config.initial_lives, 0, config.initial_move_period_ms, {}, {}, {}, Rng(config.rng_seed),
                0, 0, 0, 0, 0};
    install_base(s);
    return s;
}

std::vector<PrimeInterval> legal_moves(const GameState& s) {
    std::vector<PrimeInterval> out;
    if (!s.monkey_current) return out;
    for (const Step& st : s.analysis->steps(*s.monkey_current, SequenceVariant::SL)) {
        if (st.to == s.monkey_previous) continue;
        if (std::find(out.begin(), out.end(), st.to) == out.end()) out.push_back(st.to);
    }
    return out;
}

Transition step_monkey(GameState s) {
    if (s.phase != Phase::Running) throw ArgumentError("step_monkey requires a running game");
    std::vector<Effect> out;
    const auto moves = legal_moves(s);
    if (moves.empty()) {
        lose_life(s, "stuck", out);
        return {std::move(s), std::move(out)};
    }
    const PrimeInterval from = *s.monkey_current;
    const PrimeInterval to = moves[s.rng.uniform(moves.size())];
    s.monkey_previous = from;
    s.monkey_current = to;
    ++s.move_count;
    s.move_period_ms = std::max<int>(
        s.config.min_move_period_ms,
        static_cast<int>(static_cast<std::int64_t>(s.move_period_ms) * s.config.speedup_numerator /
                         s.config.speedup_denominator));
    s.next_move_ms = s.clock_ms + s.move_period_ms;
    Effect moved = effect(s, "moved");
    moved.edge = to;
    out.push_back(moved);

    const SwingAnalysis& a = *s.analysis;
    // Returns true when the window closed without a qualifying move.
    auto settle = [&](std::optional<FeatureCell>& f, FeatureKind kind, int reward) {
        if (!f) return false;
        if (qualifies(a, from, to, f->cell)) {
            Effect e = effect(s, "feature_resolved");
            e.feature = kind;
            e.cell = f->cell;
            out.push_back(e);
            f.reset();
            gain_lives(s, reward, kind == FeatureKind::Bonus ? "bonus" : "adventure", out);
            return false;
        }
        if (--f->moves_left > 0) return false;
        Effect e = effect(s, "feature_expired");
        e.feature = kind;
        e.cell = f->cell;
        out.push_back(e);
        f.reset();
        return true;
    };
    settle(s.bonus, FeatureKind::Bonus, s.config.bonus_reward_lives);
    if (settle(s.adventure, FeatureKind::Adventure, s.config.adventure_reward_lives) &&
        lose_life(s, "adventure_failed", out))
        return {std::move(s), std::move(out)};
    if (s.candidate && --s.candidate->moves_left <= 0) s.candidate.reset();

    if (s.pending_eye_cell && s.is_old_edge(to)) apply_eye(s, *s.pending_eye_cell, out);
    spawn(s, out);
    return {std::move(s), std::move(out)};
}

Transition handle_event(GameState state, const GameEvent& event) {
    return std::visit(
        [&](const auto& ev) -> Transition {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, ClickCell>)
                return handle_click(std::move(state), ev.cell);
            else if constexpr (std::is_same_v<T, ChooseStartEdge>)
                return handle_start(std::move(state), ev.edge);
            else
                return handle_tick(std::move(state), ev.ms);
        },
        event);
}

std::vector<std::string> check_invariants(const GameState& s) {
    std::vector<std::string> bad;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) bad.emplace_back(what);
    };
    expect(s.eye_cell.has_value() == s.eye_element.has_value(), "eye_element present iff eye_cell present");
    expect(s.analysis && s.analysis->diagram() == s.board, "analysis describes the board");
    const int eye_count = s.eye_cell ? 1 : 0;
    expect(s.board.size() == s.base.size() + eye_count, "|L' \\ L| equals the eye count");
    expect(s.board.edges().size() == s.base.edges().size() + 2 * eye_count, "an eye adds exactly two edges");
    if (s.eye_element) {
        expect(*s.eye_element == s.base.size(), "eye id is the first new id");
        expect(is_eye(s.board, *s.eye_element), "the new element is an eye");
        expect(eyes(s.board).size() == 1, "the board has exactly one eye");
        expect(is_cell(s.base, *s.eye_cell), "eye cell is a cell of L");
    } else {
        expect(s.board == s.base, "without an eye L' equals L");
    }
    expect(!s.monkey_current || s.board.is_edge(*s.monkey_current), "monkey sits on an edge of L'");
    expect(!s.monkey_current || s.monkey_previous != s.monkey_current, "previous differs from current");
    expect((s.phase == Phase::Running) == s.monkey_current.has_value() || s.phase == Phase::GameOver,
           "a running monkey has an edge");
    expect(!s.pending_eye_cell || is_cell(s.base, *s.pending_eye_cell), "pending eye is a cell of L");
    for (const auto* f : {&s.bonus, &s.candidate, &s.adventure}) {
        if (!*f) continue;
        expect(contains(s.analysis->cells(), (*f)->cell), "feature cells are cells of L'");
        expect((*f)->moves_left > 0, "feature windows are open");
    }
    expect(!(s.candidate && s.adventure), "candidate and adventure never coexist");
    expect(s.lives >= 0, "lives are non-negative");
    expect((s.phase == Phase::GameOver) == (s.lives == 0), "game over iff no lives");
    expect(s.move_period_ms >= s.config.min_move_period_ms, "period respects its floor");
    expect(is_good(s.base, GoodnessCriteria{s.config.min_cells, s.config.board_length, s.config.board_length}),
           "base diagram is good");
    return bad;
}

GameEvent Autoplayer::next_event(const GameState& s) {
    if (s.phase == Phase::ChoosingStart) {
        const auto boundary = boundary_edges(s.board);
        std::vector<PrimeInterval> inner;
        for (const auto& e : s.board.edges())
            if (!std::binary_search(boundary.begin(), boundary.end(), e)) inner.push_back(e);
        const auto& pool = inner.empty() ? s.board.edges() : inner;
        return ChooseStartEdge{pool[rng_.uniform(pool.size())]};
    }
    if (s.phase == Phase::GameOver) return Tick{0};
    if (s.candidate) return ClickCell{s.candidate->cell};

    const bool clicked = last_click_board_ == s.board_number && last_click_move_ == s.move_count;
    if (!clicked && s.monkey_current && s.is_old_edge(*s.monkey_current) && legal_moves(s).size() <= 1) {
        std::vector<FourCell> near;
        for (const auto& c : enumerate_cells(s.base))
            if (c.has_side(*s.monkey_current) && c != s.eye_cell) near.push_back(c);
        if (!near.empty()) {
            last_click_board_ = s.board_number;
            last_click_move_ = s.move_count;
            return ClickCell{near[rng_.uniform(near.size())]};
        }
    }
    return Tick{std::max<std::int64_t>(0, s.next_move_ms - s.clock_ms)};
}

Snapshot snapshot(const GameState& s) {
    Snapshot snap{s.sequence, s.phase, s.lives, s.move_count, s.move_period_ms, s.clock_ms, {}, {},
                  s.board_number, s.board, {}, s.analysis->cells(), s.eye_cell, s.eye_element,
                  s.pending_eye_cell, s.monkey_current, s.monkey_previous, {}};
    if (s.phase == Phase::ChoosingStart) snap.start_deadline_ms = s.phase_started_ms + s.config.start_choice_ms;
    if (s.phase == Phase::Running) snap.next_move_ms = s.next_move_ms;
    for (const auto& e : s.board.edges()) snap.edges.push_back({e, !s.is_old_edge(e)});
    if (s.bonus) snap.features.push_back({FeatureKind::Bonus, s.bonus->cell, s.bonus->moves_left});
    if (s.candidate) snap.features.push_back({FeatureKind::Candidate, s.candidate->cell, s.candidate->moves_left});
    if (s.adventure) snap.features.push_back({FeatureKind::Adventure, s.adventure->cell, s.adventure->moves_left});
    return snap;
}

} // namespace swinglat
