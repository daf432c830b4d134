#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swinglat/builder.hpp"
#include "swinglat/rng.hpp"
#include "swinglat/swing.hpp"

namespace swinglat {

struct GameConfig {
    int board_length = 6;
    int initial_lives = 3;
    int start_choice_ms = 3000;
    int bonus_window_moves = 10;
    int candidate_window_moves = 3;
    int adventure_window_moves = 20;
    int bonus_reward_lives = 1;
    int adventure_reward_lives = 2;
    int initial_move_period_ms = 1000;
    // Per-move period multiplier, speedup_numerator / speedup_denominator.
    int speedup_numerator = 995;
    int speedup_denominator = 1000;
    int min_move_period_ms = 250;
    double bonus_spawn_probability = 0.05;
    double candidate_spawn_probability = 0.05;
    // Whether an adventure failure also moves the game to a new board.
    // Getting stuck always does.
    bool replace_board_on_any_life_loss = true;
    int min_cells = 4;
    std::uint64_t rng_seed = 1;

    /// Throws ArgumentError on non-positive windows/periods or a factor outside (0, 1].
    void validate() const;
    bool operator==(const GameConfig&) const = default;
};

enum class Phase { ChoosingStart, Running, GameOver };
enum class FeatureKind { Bonus, Candidate, Adventure };

std::string_view to_string(Phase phase);
std::string_view to_string(FeatureKind kind);
/// grey / blue / purple
std::string_view feature_color(FeatureKind kind);

struct FeatureCell {
    FourCell cell;
    int moves_left = 0;

    bool operator==(const FeatureCell&) const = default;
};

struct ClickCell {
    FourCell cell;
};
struct ChooseStartEdge {
    PrimeInterval edge;
};
struct Tick {
    std::int64_t ms = 0;
};
using GameEvent = std::variant<ClickCell, ChooseStartEdge, Tick>;

/// UI notification produced by an event, also the replay log record.
struct Effect {
    long move = 0;
    std::string kind;  // moved, start_chosen, eye_changed, eye_pending, feature_spawned,
                       // feature_accepted, feature_resolved, feature_expired,
                       // feature_cancelled, life_gained, life_lost, board_replaced,
                       // game_over, rejected
    std::optional<PrimeInterval> edge;
    std::optional<FourCell> cell;
    std::optional<FeatureKind> feature;
    std::string cause;  // e.g. stuck, bonus, adventure, adventure_failed, player, timeout
    int amount = 0;     // lives gained or lost
    int lives = 0;      // lives after the effect

    bool operator==(const Effect&) const = default;
};

struct GameState {
    GameConfig config;
    Diagram base;   // L
    Diagram board;  // L' = L plus the current eye, with layout
    std::shared_ptr<const SwingAnalysis> analysis;  // of board
    std::optional<FourCell> eye_cell;               // a cell of L
    std::optional<ElementId> eye_element;           // id in board, always base.size()
    std::optional<FourCell> pending_eye_cell;
    std::optional<PrimeInterval> monkey_current;
    std::optional<PrimeInterval> monkey_previous;
    Phase phase = Phase::ChoosingStart;
    int lives = 0;
    long move_count = 0;
    int move_period_ms = 0;
    std::optional<FeatureCell> bonus;
    std::optional<FeatureCell> candidate;
    std::optional<FeatureCell> adventure;
    Rng rng;
    std::int64_t clock_ms = 0;
    std::int64_t phase_started_ms = 0;
    std::int64_t next_move_ms = 0;
    int board_number = 0;
    long sequence = 0;  // events applied

    /// An edge of L (both endpoints old).
    bool is_old_edge(PrimeInterval e) const { return e.lower < base.size() && e.upper < base.size(); }
};

struct Transition {
    GameState state;
    std::vector<Effect> effects;
};

/// Fresh game on a random good board of config.board_length.
GameState new_game(const GameConfig& config);

/// Pure fold step. Malformed or out-of-phase events yield a single
/// "rejected" effect and leave the state unchanged.
Transition handle_event(GameState state, const GameEvent& event);

/// SL-targets of the monkey's edge in L' minus the edge it came from.
std::vector<PrimeInterval> legal_moves(const GameState& state);

/// One monkey move (or a lost life when stuck). Requires phase Running.
Transition step_monkey(GameState state);

/// Violated engine invariants, empty when consistent.
std::vector<std::string> check_invariants(const GameState& state);

/// Synthetic screen-saver player. Deterministic given its seed.
class Autoplayer {
public:
    explicit Autoplayer(std::uint64_t seed) : rng_(seed) {}
    GameEvent next_event(const GameState& state);

private:
    Rng rng_;
    long last_click_move_ = -1;
    int last_click_board_ = -1;
};

struct SnapshotEdge {
    PrimeInterval edge;
    bool is_new = false;

    bool operator==(const SnapshotEdge&) const = default;
};

struct SnapshotFeature {
    FeatureKind kind;
    FourCell cell;
    int moves_left = 0;

    bool operator==(const SnapshotFeature&) const = default;
};

/// Complete serializable view of a game state.
struct Snapshot {
    long sequence = 0;
    Phase phase = Phase::ChoosingStart;
    int lives = 0;
    long move_count = 0;
    int move_period_ms = 0;
    std::int64_t clock_ms = 0;
    std::optional<std::int64_t> start_deadline_ms;
    std::optional<std::int64_t> next_move_ms;
    int board_number = 0;
    Diagram board;
    std::vector<SnapshotEdge> edges;
    std::vector<FourCell> cells;
    std::optional<FourCell> eye_cell;
    std::optional<ElementId> eye_element;
    std::optional<FourCell> pending_eye_cell;
    std::optional<PrimeInterval> monkey_current;
    std::optional<PrimeInterval> monkey_previous;
    std::vector<SnapshotFeature> features;

    bool operator==(const Snapshot&) const = default;
};

Snapshot snapshot(const GameState& state);

} // namespace swinglat
