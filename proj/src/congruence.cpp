#include "swinglat/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace swinglat {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False if already in one block.
    bool merge(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        // Keep the smaller id as root so normal form falls out directly.
        if (y < x) std::swap(x, y);
        parent_[y] = x;
        return true;
    }

private:
    std::vector<int> parent_;
};

} // namespace

Partition Partition::identity(int n) {
    Partition p;
    p.block_of_.resize(n);
    std::iota(p.block_of_.begin(), p.block_of_.end(), 0);
    return p;
}

Partition Partition::single_block(int n) {
    Partition p;
    p.block_of_.assign(n, 0);
    return p;
}

Partition Partition::from_labels(std::span<const int> labels) {
    Partition p;
    p.block_of_.resize(labels.size());
    std::map<int, ElementId> first;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        auto [it, inserted] = first.emplace(labels[x], static_cast<ElementId>(x));
        p.block_of_[x] = it->second;
    }
    return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<ElementId>>& blocks) {
    std::vector<int> labels(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (ElementId x : blocks[b]) {
            if (x < 0 || x >= n || labels[x] >= 0) throw ArgumentError("blocks do not partition the element set");
            labels[x] = static_cast<int>(b);
        }
    if (std::find(labels.begin(), labels.end(), -1) != labels.end())
        throw ArgumentError("blocks do not cover the element set");
    return from_labels(labels);
}

int Partition::block_count() const {
    int count = 0;
    for (std::size_t x = 0; x < block_of_.size(); ++x)
        if (block_of_[x] == static_cast<ElementId>(x)) ++count;
    return count;
}

std::vector<std::vector<ElementId>> Partition::blocks() const {
    std::vector<std::vector<ElementId>> out;
    std::vector<int> slot(block_of_.size(), -1);
    for (std::size_t x = 0; x < block_of_.size(); ++x) {
        const ElementId rep = block_of_[x];
        if (slot[rep] < 0) {
            slot[rep] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[rep]].push_back(static_cast<ElementId>(x));
    }
    return out;
}

bool Partition::refines(const Partition& other) const {
    if (other.size() != size()) return false;
    for (std::size_t x = 0; x < block_of_.size(); ++x)
        if (!other.same_block(static_cast<ElementId>(x), block_of_[x])) return false;
    return true;
}

ClosureTrace congruence_closure_traced(const Diagram& d, std::span<const ElementPair> pairs) {
    const int n = d.size();
    UnionFind uf(n);
    ClosureTrace trace;
    // Pushing only the generating pairs through every unary translation is
    // enough: a translation maps a chain of generators to a chain.
    std::vector<ElementPair> work;
    auto unite = [&](ElementId x, ElementId y) {
        if (uf.merge(x, y)) {
            trace.merges.emplace_back(x, y);
            work.emplace_back(x, y);
        }
    };
    for (const auto& [x, y] : pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n) throw ArgumentError("seed pair out of range");
        unite(x, y);
    }
    while (!work.empty()) {
        const auto [x, y] = work.back();
        work.pop_back();
        for (ElementId z = 0; z < n; ++z) {
            unite(d.meet(x, z), d.meet(y, z));
            unite(d.join(x, z), d.join(y, z));
        }
    }
    std::vector<int> labels(n);
    for (int x = 0; x < n; ++x) labels[x] = uf.find(x);
    trace.result = Partition::from_labels(labels);
    return trace;
}

Partition congruence_closure(const Diagram& d, std::span<const ElementPair> pairs) {
    return congruence_closure_traced(d, pairs).result;
}

Partition principal_congruence(const Diagram& d, PrimeInterval p) {
    if (!d.is_edge(p)) throw ArgumentError("principal_congruence: not an edge");
    const ElementPair seed{p.lower, p.upper};
    return congruence_closure(d, std::span(&seed, 1));
}

bool is_congruence(const Diagram& d, const Partition& p) {
    if (p.size() != d.size()) return false;
    for (const auto& block : p.blocks())
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                for (ElementId z = 0; z < d.size(); ++z) {
                    if (!p.same_block(d.meet(block[i], z), d.meet(block[j], z))) return false;
                    if (!p.same_block(d.join(block[i], z), d.join(block[j], z))) return false;
                }
    return true;
}

} // namespace swinglat
