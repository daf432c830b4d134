#include "swinglat/diagram.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace swinglat {

PrimeInterval FourCell::opposite(PrimeInterval e) const {
    if (e == lower_left()) return upper_right();
    if (e == upper_right()) return lower_left();
    if (e == lower_right()) return upper_left();
    if (e == upper_left()) return lower_right();
    throw ArgumentError("edge is not a side of the cell");
}

std::string Violation::to_string() const {
    std::ostringstream out;
    out << rule << '(';
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (i) out << ',';
        out << witnesses[i];
    }
    out << ')';
    return out.str();
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
    std::string text = "invalid diagram:";
    for (const auto& v : violations) text += " " + v.to_string();
    return text;
}

bool test_bit(const std::vector<std::uint64_t>& rows, int words, int row, int col) {
    return (rows[static_cast<std::size_t>(row) * words + col / 64] >> (col % 64)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& rows, int words, int row, int col) {
    rows[static_cast<std::size_t>(row) * words + col / 64] |= std::uint64_t{1} << (col % 64);
}

// Order tables shared by validate() and Diagram construction.
struct Analysis {
    std::vector<Violation> violations;
    std::vector<std::vector<ElementId>> lower;
    int words = 0;
    std::vector<std::uint64_t> up;
    std::vector<std::uint64_t> down;
    std::vector<int> height;
    std::vector<int> rank;
    std::vector<ElementId> meet;
    std::vector<ElementId> join;
    ElementId bottom = 0;
    ElementId top = 0;
};

// Reverse postorder of a DFS from `root` visiting upper covers right-to-left
// (right_first) or left-to-right. The right-first order places incomparable
// elements left to right.
std::vector<int> sweep_rank(const std::vector<std::vector<ElementId>>& upper, ElementId root,
                            bool right_first) {
    const int n = static_cast<int>(upper.size());
    std::vector<int> rank(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<ElementId> post;
    post.reserve(n);
    std::vector<std::pair<ElementId, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    while (!stack.empty()) {
        auto& [x, next] = stack.back();
        const auto& ups = upper[x];
        if (next < ups.size()) {
            const ElementId c = right_first ? ups[ups.size() - 1 - next] : ups[next];
            ++next;
            if (!seen[c]) {
                seen[c] = 1;
                stack.emplace_back(c, 0);
            }
        } else {
            post.push_back(x);
            stack.pop_back();
        }
    }
    int r = 0;
    for (auto it = post.rbegin(); it != post.rend(); ++it) rank[*it] = r++;
    return rank;
}

Analysis analyze(const CoverData& data) {
    Analysis a;
    auto& out = a.violations;
    const auto& upper = data.upper_covers;
    const int n = static_cast<int>(upper.size());
    if (n == 0) {
        out.push_back({"empty", {}});
        return a;
    }

    for (ElementId x = 0; x < n; ++x) {
        std::vector<ElementId> seen;
        for (ElementId y : upper[x]) {
            if (y < 0 || y >= n) {
                out.push_back({"bad-id", {x, y}});
            } else if (y == x) {
                out.push_back({"self-cover", {x}});
            } else if (std::find(seen.begin(), seen.end(), y) != seen.end()) {
                out.push_back({"duplicate-cover", {x, y}});
            }
            seen.push_back(y);
        }
    }
    if (!out.empty()) return a;

    a.lower.assign(n, {});
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y : upper[x]) a.lower[y].push_back(x);

    if (data.lower_covers) {
        const auto& given = *data.lower_covers;
        if (static_cast<int>(given.size()) != n) {
            out.push_back({"bad-lower-size", {static_cast<ElementId>(given.size())}});
            return a;
        }
        for (ElementId y = 0; y < n; ++y) {
            std::vector<ElementId> seen;
            for (ElementId x : given[y]) {
                if (x < 0 || x >= n) {
                    out.push_back({"bad-id", {y, x}});
                    continue;
                }
                if (std::find(seen.begin(), seen.end(), x) != seen.end())
                    out.push_back({"duplicate-cover", {x, y}});
                seen.push_back(x);
                if (std::find(upper[x].begin(), upper[x].end(), y) == upper[x].end())
                    out.push_back({"cover-mismatch", {x, y}});
            }
            for (ElementId x : a.lower[y])
                if (std::find(given[y].begin(), given[y].end(), x) == given[y].end())
                    out.push_back({"cover-mismatch", {x, y}});
        }
        if (!out.empty()) return a;
    }

    // Kahn's algorithm; leftover elements lie on a cycle.
    std::vector<int> indegree(n, 0);
    for (ElementId x = 0; x < n; ++x) indegree[x] = static_cast<int>(a.lower[x].size());
    std::vector<ElementId> topo;
    topo.reserve(n);
    for (ElementId x = 0; x < n; ++x)
        if (indegree[x] == 0) topo.push_back(x);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (ElementId y : upper[topo[i]])
            if (--indegree[y] == 0) topo.push_back(y);
    if (static_cast<int>(topo.size()) != n) {
        std::vector<ElementId> cyclic;
        for (ElementId x = 0; x < n; ++x)
            if (indegree[x] > 0) cyclic.push_back(x);
        out.push_back({"cycle", cyclic});
        return a;
    }

    const int words = (n + 63) / 64;
    a.words = words;
    a.up.assign(static_cast<std::size_t>(n) * words, 0);
    a.down.assign(static_cast<std::size_t>(n) * words, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const ElementId x = *it;
        set_bit(a.up, words, x, x);
        for (ElementId y : upper[x])
            for (int w = 0; w < words; ++w) a.up[x * words + w] |= a.up[y * words + w];
    }
    a.height.assign(n, 0);
    for (ElementId x : topo) {
        set_bit(a.down, words, x, x);
        for (ElementId y : a.lower[x]) {
            for (int w = 0; w < words; ++w) a.down[x * words + w] |= a.down[y * words + w];
            a.height[x] = std::max(a.height[x], a.height[y] + 1);
        }
    }
    auto leq = [&](ElementId x, ElementId y) { return test_bit(a.up, words, x, y); };

    for (ElementId x = 0; x < n; ++x)
        for (ElementId y : upper[x])
            for (ElementId z : upper[x])
                if (z != y && leq(z, y)) {
                    out.push_back({"transitive-edge", {x, y}});
                    break;
                }

    // Least element of a bitset of common bounds, or -1.
    std::vector<std::uint64_t> common(words);
    auto extreme = [&](const std::vector<std::uint64_t>& sets, bool lowest) -> ElementId {
        ElementId best = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = common[w];
            while (bits) {
                const ElementId z = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (best < 0 || (lowest ? a.height[z] < a.height[best] : a.height[z] > a.height[best]))
                    best = z;
            }
        }
        if (best < 0) return -1;
        for (int w = 0; w < words; ++w)
            if ((common[w] & ~sets[best * words + w]) != 0) return -1;
        return best;
    };
    a.meet.assign(static_cast<std::size_t>(n) * n, -1);
    a.join.assign(static_cast<std::size_t>(n) * n, -1);
    for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = x; y < n; ++y) {
            for (int w = 0; w < words; ++w) common[w] = a.up[x * words + w] & a.up[y * words + w];
            const ElementId j = extreme(a.up, true);
            for (int w = 0; w < words; ++w) common[w] = a.down[x * words + w] & a.down[y * words + w];
            const ElementId m = extreme(a.down, false);
            if (j < 0) out.push_back({"no-join", {x, y}});
            if (m < 0) out.push_back({"no-meet", {x, y}});
            a.join[x * n + y] = a.join[y * n + x] = j;
            a.meet[x * n + y] = a.meet[y * n + x] = m;
        }
    }
    if (!out.empty()) return a;

    a.bottom = a.meet[0];
    a.top = a.join[0];
    for (ElementId x = 1; x < n; ++x) {
        a.bottom = a.meet[a.bottom * n + x];
        a.top = a.join[a.top * n + x];
    }

    a.rank = sweep_rank(upper, a.bottom, true);
    auto by_rank = [&](ElementId u, ElementId v) { return a.rank[u] < a.rank[v]; };
    for (ElementId x = 0; x < n; ++x) {
        if (!std::is_sorted(upper[x].begin(), upper[x].end(), by_rank))
            out.push_back({"upper-order", {x}});
    }
    if (data.lower_covers) {
        for (ElementId y = 0; y < n; ++y) {
            const auto& given = (*data.lower_covers)[y];
            if (!std::is_sorted(given.begin(), given.end(), by_rank))
                out.push_back({"lower-order", {y}});
        }
        a.lower = *data.lower_covers;
    } else {
        for (auto& list : a.lower) std::sort(list.begin(), list.end(), by_rank);
    }

    if (data.layout) {
        const auto& pts = *data.layout;
        if (static_cast<int>(pts.size()) != n) {
            out.push_back({"layout-size", {static_cast<ElementId>(pts.size())}});
        } else {
            for (ElementId x = 0; x < n; ++x)
                for (ElementId y : upper[x])
                    if (!(pts[y].y > pts[x].y)) out.push_back({"layout-not-increasing", {x, y}});
            for (ElementId u = 0; u < n; ++u)
                for (ElementId v = u + 1; v < n; ++v) {
                    if (pts[u].y != pts[v].y) continue;
                    const bool drawn_left = pts[u].x < pts[v].x;
                    if (pts[u].x == pts[v].x || drawn_left != (a.rank[u] < a.rank[v]))
                        out.push_back({"layout-order", {u, v}});
                }
        }
    }
    return a;
}

} // namespace

std::vector<Violation> validate(const CoverData& data) { return analyze(data).violations; }

InvalidDiagram::InvalidDiagram(std::vector<Violation> violations)
    : ArgumentError(join_violations(violations)), violations_(std::move(violations)) {}

Diagram Diagram::from_cover_data(const CoverData& data) {
    Analysis a = analyze(data);
    if (!a.violations.empty()) throw InvalidDiagram(std::move(a.violations));
    Diagram d;
    d.upper_ = data.upper_covers;
    d.lower_ = std::move(a.lower);
    d.layout_ = data.layout;
    d.bottom_ = a.bottom;
    d.top_ = a.top;
    d.words_ = a.words;
    d.up_sets_ = std::move(a.up);
    d.meet_ = std::move(a.meet);
    d.join_ = std::move(a.join);
    d.height_ = std::move(a.height);
    d.rank_ = std::move(a.rank);
    d.edge_ids_.resize(d.upper_.size());
    for (ElementId x = 0; x < d.size(); ++x)
        for (ElementId y : d.upper_[x]) {
            d.edge_ids_[x].push_back(static_cast<int>(d.edges_.size()));
            d.edges_.push_back({x, y});
        }
    return d;
}

Diagram Diagram::from_upper_covers(std::vector<std::vector<ElementId>> upper,
                                   std::optional<std::vector<Point>> layout) {
    return from_cover_data(CoverData{std::move(upper), std::nullopt, std::move(layout)});
}

void Diagram::check_id(ElementId x) const {
    if (x < 0 || x >= size()) throw ArgumentError("element id " + std::to_string(x) + " out of range");
}

std::span<const ElementId> Diagram::upper_covers(ElementId x) const {
    check_id(x);
    return upper_[x];
}

std::span<const ElementId> Diagram::lower_covers(ElementId x) const {
    check_id(x);
    return lower_[x];
}

bool Diagram::leq(ElementId x, ElementId y) const {
    check_id(x);
    check_id(y);
    return test_bit(up_sets_, words_, x, y);
}

bool Diagram::covers(ElementId x, ElementId y) const {
    check_id(x);
    check_id(y);
    return std::find(upper_[x].begin(), upper_[x].end(), y) != upper_[x].end();
}

ElementId Diagram::meet(ElementId x, ElementId y) const {
    check_id(x);
    check_id(y);
    return meet_[static_cast<std::size_t>(x) * size() + y];
}

ElementId Diagram::join(ElementId x, ElementId y) const {
    check_id(x);
    check_id(y);
    return join_[static_cast<std::size_t>(x) * size() + y];
}

int Diagram::height(ElementId x) const {
    check_id(x);
    return height_[x];
}

std::optional<int> Diagram::edge_index(PrimeInterval e) const {
    if (e.lower < 0 || e.lower >= size()) return std::nullopt;
    const auto& ups = upper_[e.lower];
    for (std::size_t i = 0; i < ups.size(); ++i)
        if (ups[i] == e.upper) return edge_ids_[e.lower][i];
    return std::nullopt;
}

int Diagram::planar_rank(ElementId x) const {
    check_id(x);
    return rank_[x];
}

bool Diagram::left_of(ElementId x, ElementId y) const {
    return !comparable(x, y) && rank_[x] < rank_[y];
}

CoverData Diagram::cover_data() const { return CoverData{upper_, lower_, layout_}; }

Diagram Diagram::with_layout(std::vector<Point> layout) const {
    CoverData data = cover_data();
    data.layout = std::move(layout);
    return from_cover_data(data);
}

Diagram Diagram::without_layout() const {
    Diagram copy = *this;
    copy.layout_.reset();
    return copy;
}

bool is_semimodular(const Diagram& d) {
    for (ElementId x = 0; x < d.size(); ++x)
        for (ElementId y : d.upper_covers(x))
            for (ElementId z = 0; z < d.size(); ++z) {
                const ElementId lo = d.join(x, z);
                const ElementId hi = d.join(y, z);
                if (lo != hi && !d.covers(lo, hi)) return false;
            }
    return true;
}

std::vector<ElementId> join_irreducibles(const Diagram& d) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < d.size(); ++x)
        if (d.lower_covers(x).size() == 1) out.push_back(x);
    return out;
}

std::vector<ElementId> meet_irreducibles(const Diagram& d) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < d.size(); ++x)
        if (d.upper_covers(x).size() == 1) out.push_back(x);
    return out;
}

bool is_doubly_irreducible(const Diagram& d, ElementId x) {
    return d.lower_covers(x).size() == 1 && d.upper_covers(x).size() == 1;
}

bool has_cover_preserving_diamond(const Diagram& d) {
    for (ElementId o = 0; o < d.size(); ++o) {
        const auto ups = d.upper_covers(o);
        if (ups.size() < 3) continue;
        for (ElementId t = 0; t < d.size(); ++t) {
            int shared = 0;
            for (ElementId a : ups)
                if (d.covers(a, t)) ++shared;
            if (shared >= 3) return true;
        }
    }
    return false;
}

bool is_slim(const Diagram& d) {
    if (!is_semimodular(d)) throw ArgumentError("is_slim requires a semimodular diagram");
    const auto j = join_irreducibles(d);
    bool antichain = false;
    for (std::size_t p = 0; p < j.size() && !antichain; ++p)
        for (std::size_t q = p + 1; q < j.size() && !antichain; ++q) {
            if (d.comparable(j[p], j[q])) continue;
            for (std::size_t r = q + 1; r < j.size(); ++r)
                if (!d.comparable(j[p], j[r]) && !d.comparable(j[q], j[r])) {
                    antichain = true;
                    break;
                }
        }
    if (antichain != has_cover_preserving_diamond(d))
        throw StructuralError("slimness criteria disagree: 3-antichain in J is " +
                              std::string(antichain ? "present" : "absent") +
                              " but cover-preserving diamond is not");
    return !antichain;
}

std::vector<FourCell> enumerate_cells(const Diagram& d) {
    std::vector<FourCell> cells;
    for (ElementId t = 0; t < d.size(); ++t) {
        const auto lows = d.lower_covers(t);
        for (std::size_t i = 0; i + 1 < lows.size(); ++i) {
            const ElementId a = lows[i];
            const ElementId b = lows[i + 1];
            const ElementId o = d.meet(a, b);
            if (!d.covers(o, a) || !d.covers(o, b))
                throw StructuralError("adjacent lower covers " + std::to_string(a) + ", " +
                                      std::to_string(b) + " of " + std::to_string(t) +
                                      " do not span a 4-cell");
            cells.push_back({o, a, b, t});
        }
    }
    return cells;
}

bool is_cell(const Diagram& d, const FourCell& cell) {
    const int n = d.size();
    for (ElementId x : {cell.bottom, cell.left_mid, cell.right_mid, cell.top})
        if (x < 0 || x >= n) return false;
    const auto lows = d.lower_covers(cell.top);
    for (std::size_t i = 0; i + 1 < lows.size(); ++i)
        if (lows[i] == cell.left_mid && lows[i + 1] == cell.right_mid)
            return d.meet(cell.left_mid, cell.right_mid) == cell.bottom &&
                   d.covers(cell.bottom, cell.left_mid) && d.covers(cell.bottom, cell.right_mid);
    return false;
}

bool is_eye(const Diagram& d, ElementId x) {
    if (!is_doubly_irreducible(d, x)) return false;
    const auto siblings = d.upper_covers(d.lower_covers(x)[0]);
    return siblings.size() >= 3 && siblings.front() != x && siblings.back() != x;
}

std::vector<ElementId> eyes(const Diagram& d) {
    std::vector<ElementId> out;
    for (ElementId x = 0; x < d.size(); ++x)
        if (is_eye(d, x)) out.push_back(x);
    return out;
}

Reduction remove_elements(const Diagram& d, std::span<const ElementId> removed) {
    const int n = d.size();
    std::vector<ElementId> old_to_new(n, 0);
    for (ElementId x : removed) {
        if (x < 0 || x >= n) throw ArgumentError("element id out of range");
        old_to_new[x] = -1;
    }
    ElementId next = 0;
    for (ElementId x = 0; x < n; ++x)
        if (old_to_new[x] >= 0) old_to_new[x] = next++;

    CoverData data;
    data.upper_covers.resize(next);
    data.lower_covers.emplace(next);
    if (d.layout()) data.layout.emplace();
    for (ElementId x = 0; x < n; ++x) {
        const ElementId nx = old_to_new[x];
        if (nx < 0) continue;
        for (ElementId y : d.upper_covers(x))
            if (old_to_new[y] >= 0) data.upper_covers[nx].push_back(old_to_new[y]);
        for (ElementId y : d.lower_covers(x))
            if (old_to_new[y] >= 0) (*data.lower_covers)[nx].push_back(old_to_new[y]);
        if (d.layout()) data.layout->push_back((*d.layout())[x]);
    }
    return {Diagram::from_cover_data(data), std::move(old_to_new)};
}

Reduction full_slimming(const Diagram& d) {
    Reduction result{d, {}};
    result.old_to_new.resize(d.size());
    std::iota(result.old_to_new.begin(), result.old_to_new.end(), 0);
    for (;;) {
        const auto found = eyes(result.diagram);
        if (found.empty()) return result;
        const ElementId victim = found.front();
        Reduction step = remove_elements(result.diagram, std::span(&victim, 1));
        for (auto& id : result.old_to_new)
            if (id >= 0) id = step.old_to_new[id];
        result.diagram = std::move(step.diagram);
    }
}

std::vector<ElementId> left_boundary(const Diagram& d) {
    std::vector<ElementId> chain{d.bottom()};
    while (chain.back() != d.top()) chain.push_back(d.upper_covers(chain.back()).front());
    return chain;
}

std::vector<ElementId> right_boundary(const Diagram& d) {
    std::vector<ElementId> chain{d.bottom()};
    while (chain.back() != d.top()) chain.push_back(d.upper_covers(chain.back()).back());
    return chain;
}

std::vector<PrimeInterval> boundary_edges(const Diagram& d) {
    std::vector<PrimeInterval> out;
    for (const auto& chain : {left_boundary(d), right_boundary(d)})
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back({chain[i], chain[i + 1]});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool on_boundary(const Diagram& d, ElementId x) {
    const auto l = left_boundary(d);
    const auto r = right_boundary(d);
    return std::find(l.begin(), l.end(), x) != l.end() || std::find(r.begin(), r.end(), x) != r.end();
}

std::vector<Point> compute_layout(const Diagram& d) {
    std::vector<std::vector<ElementId>> upper(d.size());
    for (ElementId x = 0; x < d.size(); ++x) {
        const auto ups = d.upper_covers(x);
        upper[x].assign(ups.begin(), ups.end());
    }
    const auto leftward = sweep_rank(upper, d.bottom(), false);
    std::vector<Point> pts(d.size());
    for (ElementId x = 0; x < d.size(); ++x)
        pts[x] = {static_cast<double>(d.planar_rank(x) - leftward[x]), static_cast<double>(d.height(x))};
    return pts;
}

Diagram layout(const Diagram& d) { return d.with_layout(compute_layout(d)); }

std::vector<std::vector<ElementId>> canonical_form(const Diagram& d) {
    const int n = d.size();
    std::vector<ElementId> label(n, -1);
    std::vector<ElementId> order;
    std::vector<ElementId> stack{d.bottom()};
    while (!stack.empty()) {
        const ElementId x = stack.back();
        stack.pop_back();
        if (label[x] >= 0) continue;
        label[x] = static_cast<ElementId>(order.size());
        order.push_back(x);
        const auto ups = d.upper_covers(x);
        for (auto it = ups.rbegin(); it != ups.rend(); ++it)
            if (label[*it] < 0) stack.push_back(*it);
    }
    std::vector<std::vector<ElementId>> form;
    form.reserve(2 * n);
    for (ElementId x : order) {
        std::vector<ElementId> row;
        for (ElementId y : d.upper_covers(x)) row.push_back(label[y]);
        form.push_back(std::move(row));
    }
    for (ElementId x : order) {
        std::vector<ElementId> row;
        for (ElementId y : d.lower_covers(x)) row.push_back(label[y]);
        form.push_back(std::move(row));
    }
    return form;
}

bool canonically_equal(const Diagram& a, const Diagram& b) {
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace swinglat
