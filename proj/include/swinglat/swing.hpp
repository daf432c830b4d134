#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "swinglat/congruence.hpp"
#include "swinglat/diagram.hpp"

namespace swinglat {

enum class StepKind { CellPerspective, Swing, StrongSwing, Tilt };

/// Which step relations a sequence may use.
///   SL:       cell-perspectivity, swing, tilt
///   SSL:      cell-perspectivity, strong swing, tilt
///   SS:       cell-perspectivity, swing
///   UpwardCP: cell-perspectivity from a lower side to the opposite upper side
enum class SequenceVariant { SL, SSL, SS, UpwardCP };

std::string_view to_string(StepKind kind);
std::string_view to_string(SequenceVariant variant);
std::optional<SequenceVariant> parse_variant(std::string_view name);

/// `from` relates to `to` by `kind`, witnessed by `cell`.
struct Step {
    PrimeInterval from;
    PrimeInterval to;
    StepKind kind;
    FourCell cell;

    bool operator==(const Step&) const = default;
};

struct StepSequence {
    std::vector<PrimeInterval> edges;
    std::vector<Step> steps;  // steps[i] joins edges[i] and edges[i + 1]
};

using Target = std::pair<PrimeInterval, FourCell>;

/// Maximal-chain reachability inside the edges reachable from one edge.
class SpanIndex {
public:
    /// u ≤ v required; true iff some maximal chain of [u, v] uses only
    /// reachable edges.
    bool spans(ElementId u, ElementId v) const;

private:
    friend class SwingAnalysis;
    std::vector<std::vector<bool>> reach_;
};

/// Precomputed step relations of one diagram. Holds its own copy of the
/// diagram; all queries are const and thread-safe.
class SwingAnalysis {
public:
    explicit SwingAnalysis(Diagram d);

    const Diagram& diagram() const { return d_; }
    const std::vector<FourCell>& cells() const { return cells_; }
    /// Cells having e as a side, in enumeration order.
    std::vector<FourCell> cells_with_side(PrimeInterval e) const;

    std::vector<Target> cell_perspective_targets(PrimeInterval r) const;
    std::vector<Target> swing_targets(PrimeInterval r) const;
    std::vector<Target> strong_swing_targets(PrimeInterval r) const;
    std::vector<Target> tilt_targets(PrimeInterval r) const;
    std::vector<Target> upward_targets(PrimeInterval r) const;

    /// Every single step out of r allowed by the variant, deterministic order.
    const std::vector<Step>& steps(PrimeInterval r, SequenceVariant variant) const;

    /// Edge-indexed membership of the closure of p (p itself included).
    std::vector<bool> reachable_mask(PrimeInterval p, SequenceVariant variant) const;
    std::vector<PrimeInterval> reachable(PrimeInterval p, SequenceVariant variant) const;

    /// Shortest witnessing sequence, or nullopt when q is unreachable.
    std::optional<StepSequence> find_sequence(PrimeInterval p, PrimeInterval q,
                                              SequenceVariant variant) const;

    SpanIndex span_index(PrimeInterval r, SequenceVariant variant) const;
    bool spans(PrimeInterval r, ElementId u, ElementId v, SequenceVariant variant) const;

    /// {(x, y) : p spans [x∧y, x∨y]} as a partition. Throws StructuralError
    /// if the relation is not an equivalence.
    Partition span_relation(PrimeInterval p, SequenceVariant variant) const;

private:
    int require_edge(PrimeInterval e) const;

    Diagram d_;
    std::vector<FourCell> cells_;
    std::vector<std::vector<int>> cells_of_edge_;
    std::vector<char> eye_;
    std::vector<std::vector<Step>> steps_[4];
    std::vector<std::vector<int>> succ_[4];
};

/// 1_p ∨ 0_q = 1_q and 1_p ∧ 0_q = 0_p.
bool up_perspective(const Diagram& d, PrimeInterval p, PrimeInterval q);

// Convenience wrappers that build a SwingAnalysis per call.
std::vector<Target> cell_perspective_targets(const Diagram& d, PrimeInterval r);
std::vector<Target> swing_targets(const Diagram& d, PrimeInterval r);
std::vector<Target> strong_swing_targets(const Diagram& d, PrimeInterval r);
std::vector<Target> tilt_targets(const Diagram& d, PrimeInterval r);
std::vector<PrimeInterval> reachable(const Diagram& d, PrimeInterval p, SequenceVariant variant);
std::optional<StepSequence> find_sequence(const Diagram& d, PrimeInterval p, PrimeInterval q,
                                          SequenceVariant variant);
bool spans(const Diagram& d, PrimeInterval r, ElementId u, ElementId v, SequenceVariant variant);
Partition span_relation(const Diagram& d, PrimeInterval p, SequenceVariant variant);

struct SwingDiscrepancy {
    PrimeInterval p;
    PrimeInterval q;
    bool collapsed;      // A: con(p) collapses q
    bool sl_reachable;   // B
    bool ssl_reachable;  // C
    std::optional<StepSequence> witness;
};

struct SwingLemmaReport {
    int edges = 0;
    long pairs = 0;
    long collapsed_pairs = 0;
    long sl_pairs = 0;
    long ssl_pairs = 0;
    std::vector<SwingDiscrepancy> discrepancies;
    double wall_ms = 0;

    bool ok() const { return discrepancies.empty(); }
};

/// Compares con(p) against SL and SSL reachability for every ordered edge pair.
SwingLemmaReport verify_swing_lemma(const Diagram& d);
SwingLemmaReport verify_swing_lemma(const SwingAnalysis& analysis);

} // namespace swinglat
