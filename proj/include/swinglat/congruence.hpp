#pragma once

#include <span>
#include <utility>
#include <vector>

#include "swinglat/diagram.hpp"

namespace swinglat {

/// Partition of 0..n-1 in normal form: every element is labelled with the
/// least element of its block, so equal partitions compare equal.
class Partition {
public:
    Partition() = default;
    static Partition identity(int n);
    static Partition single_block(int n);
    /// Normalizes arbitrary block labels.
    static Partition from_labels(std::span<const int> labels);
    /// Throws ArgumentError unless the blocks partition 0..n-1.
    static Partition from_blocks(int n, const std::vector<std::vector<ElementId>>& blocks);

    int size() const { return static_cast<int>(block_of_.size()); }
    ElementId representative(ElementId x) const { return block_of_.at(x); }
    bool same_block(ElementId x, ElementId y) const { return block_of_.at(x) == block_of_.at(y); }
    int block_count() const;
    /// Blocks sorted by least element, each sorted ascending.
    std::vector<std::vector<ElementId>> blocks() const;
    /// Every block of *this lies inside a block of other.
    bool refines(const Partition& other) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<ElementId> block_of_;
};

using ElementPair = std::pair<ElementId, ElementId>;

/// Least congruence containing the seed pairs: union-find plus a worklist of
/// merged pairs, each pushed through x ↦ x∧z and x ↦ x∨z for every z.
Partition congruence_closure(const Diagram& d, std::span<const ElementPair> pairs);

struct ClosureTrace {
    Partition result;
    /// Successful unions in the order they were performed.
    std::vector<ElementPair> merges;
};
ClosureTrace congruence_closure_traced(const Diagram& d, std::span<const ElementPair> pairs);

/// con(p). Throws ArgumentError if p is not an edge.
Partition principal_congruence(const Diagram& d, PrimeInterval p);

/// Substitution property for ∧ and ∨, checked over all pairs in a block
/// against every element.
bool is_congruence(const Diagram& d, const Partition& p);

inline bool collapses(const Partition& p, ElementId x, ElementId y) { return p.same_block(x, y); }

/// Brute-force oracle: every congruence of d, by filtering all set
/// partitions. Only sensible for small diagrams (Bell(n) partitions).
std::vector<Partition> all_congruences(const Diagram& d);

/// Intersection of every congruence collapsing all seed pairs.
Partition least_congruence_by_enumeration(const Diagram& d, std::span<const ElementPair> pairs);

} // namespace swinglat
