#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swinglat/errors.hpp"

namespace swinglat {

/// Dense index into a diagram's element table. Meaningless across diagrams.
using ElementId = std::int32_t;

/// An edge [lower, upper] of the diagram, lower ≺ upper.
struct PrimeInterval {
    ElementId lower = 0;
    ElementId upper = 0;

    auto operator<=>(const PrimeInterval&) const = default;
};

/// A covering square (bottom, left_mid, right_mid, top) with left_mid
/// immediately left of right_mid among the lower covers of top.
struct FourCell {
    ElementId bottom = 0;
    ElementId left_mid = 0;
    ElementId right_mid = 0;
    ElementId top = 0;

    auto operator<=>(const FourCell&) const = default;

    PrimeInterval lower_left() const { return {bottom, left_mid}; }
    PrimeInterval lower_right() const { return {bottom, right_mid}; }
    PrimeInterval upper_left() const { return {left_mid, top}; }
    PrimeInterval upper_right() const { return {right_mid, top}; }

    bool has_side(PrimeInterval e) const {
        return e == lower_left() || e == lower_right() || e == upper_left() || e == upper_right();
    }
    /// The side opposite to e; e must be a side.
    PrimeInterval opposite(PrimeInterval e) const;
    bool contains(ElementId x) const {
        return x == bottom || x == left_mid || x == right_mid || x == top;
    }
};

struct Point {
    double x = 0;
    double y = 0;

    bool operator==(const Point&) const = default;
};

/// Raw, unvalidated cover data as it comes from JSON or a builder.
/// When lower_covers is absent it is derived from the embedding.
struct CoverData {
    std::vector<std::vector<ElementId>> upper_covers;
    std::optional<std::vector<std::vector<ElementId>>> lower_covers;
    std::optional<std::vector<Point>> layout;
};

/// One broken diagram invariant, e.g. rule "no-join" with witnesses {a, b}.
struct Violation {
    std::string rule;
    std::vector<ElementId> witnesses;

    std::string to_string() const;
    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate(const CoverData& data);

class InvalidDiagram : public ArgumentError {
public:
    explicit InvalidDiagram(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// A finite lattice together with a fixed planar embedding, given by
/// left-to-right ordered upper and lower cover lists. Immutable.
class Diagram {
public:
    /// Throws InvalidDiagram unless validate(data) is empty.
    static Diagram from_cover_data(const CoverData& data);
    static Diagram from_upper_covers(std::vector<std::vector<ElementId>> upper,
                                     std::optional<std::vector<Point>> layout = std::nullopt);

    int size() const { return static_cast<int>(upper_.size()); }
    ElementId bottom() const { return bottom_; }
    ElementId top() const { return top_; }

    std::span<const ElementId> upper_covers(ElementId x) const;
    std::span<const ElementId> lower_covers(ElementId x) const;
    const std::optional<std::vector<Point>>& layout() const { return layout_; }

    bool leq(ElementId x, ElementId y) const;
    bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
    bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }
    /// x ≺ y
    bool covers(ElementId x, ElementId y) const;
    ElementId meet(ElementId x, ElementId y) const;
    ElementId join(ElementId x, ElementId y) const;

    /// Length of the longest chain from bottom to x.
    int height(ElementId x) const;
    int length() const { return height(top_); }

    /// All edges, ordered by lower id then left-to-right upper cover.
    const std::vector<PrimeInterval>& edges() const { return edges_; }
    std::optional<int> edge_index(PrimeInterval e) const;
    bool is_edge(PrimeInterval e) const { return edge_index(e).has_value(); }

    /// Position of x in the left-to-right sweep of the embedding; for
    /// incomparable x, y this orders x left of y.
    int planar_rank(ElementId x) const;
    /// x and y incomparable and x drawn to the left of y.
    bool left_of(ElementId x, ElementId y) const;

    CoverData cover_data() const;
    Diagram with_layout(std::vector<Point> layout) const;
    Diagram without_layout() const;

    bool operator==(const Diagram& other) const {
        return upper_ == other.upper_ && lower_ == other.lower_ && layout_ == other.layout_;
    }

private:
    Diagram() = default;
    void check_id(ElementId x) const;

    std::vector<std::vector<ElementId>> upper_;
    std::vector<std::vector<ElementId>> lower_;
    std::optional<std::vector<Point>> layout_;
    ElementId bottom_ = 0;
    ElementId top_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> up_sets_;  // row x: bitset of {y : x ≤ y}
    std::vector<ElementId> meet_;
    std::vector<ElementId> join_;
    std::vector<int> height_;
    std::vector<int> rank_;
    std::vector<PrimeInterval> edges_;
    std::vector<std::vector<int>> edge_ids_;  // parallel to upper_
};

// Structural queries. All require a validated diagram (any Diagram value).

bool is_semimodular(const Diagram& d);
std::vector<ElementId> join_irreducibles(const Diagram& d);
std::vector<ElementId> meet_irreducibles(const Diagram& d);
bool is_doubly_irreducible(const Diagram& d, ElementId x);

/// No 3-element antichain in J(d). Throws ArgumentError on non-semimodular
/// input and StructuralError if the diamond criterion disagrees.
bool is_slim(const Diagram& d);
bool has_cover_preserving_diamond(const Diagram& d);

/// Every cell (a∧b, a, b, t) for adjacent lower covers a, b of t, ordered by
/// t then left position. Throws StructuralError if a∧b is not covered by
/// both a and b.
std::vector<FourCell> enumerate_cells(const Diagram& d);
bool is_cell(const Diagram& d, const FourCell& cell);

std::vector<ElementId> eyes(const Diagram& d);
bool is_eye(const Diagram& d, ElementId x);

/// Diagram with the given elements deleted; surviving elements keep their
/// relative order. old_to_new maps removed ids to -1.
struct Reduction {
    Diagram diagram;
    std::vector<ElementId> old_to_new;
};
Reduction remove_elements(const Diagram& d, std::span<const ElementId> removed);

/// Removes eyes one at a time until none remain.
Reduction full_slimming(const Diagram& d);

std::vector<ElementId> left_boundary(const Diagram& d);
std::vector<ElementId> right_boundary(const Diagram& d);
std::vector<PrimeInterval> boundary_edges(const Diagram& d);
bool on_boundary(const Diagram& d, ElementId x);

/// y = height, x from the embedding's left/right sweeps. Deterministic.
Diagram layout(const Diagram& d);
std::vector<Point> compute_layout(const Diagram& d);

/// Relabeling-invariant encoding of the embedded diagram: ids assigned in
/// order of a left-first traversal from the bottom.
std::vector<std::vector<ElementId>> canonical_form(const Diagram& d);
bool canonically_equal(const Diagram& a, const Diagram& b);

} // namespace swinglat
