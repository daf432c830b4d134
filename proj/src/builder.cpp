#include "swinglat/builder.hpp"

#include <algorithm>
#include <string>

namespace swinglat {

namespace {

using CoverLists = std::vector<std::vector<ElementId>>;

void replace(std::vector<ElementId>& list, ElementId old_id, ElementId new_id) {
    auto it = std::find(list.begin(), list.end(), old_id);
    if (it == list.end()) throw StructuralError("cover list lost element " + std::to_string(old_id));
    *it = new_id;
}

void insert_beside(std::vector<ElementId>& list, ElementId anchor, ElementId id, bool after) {
    auto it = std::find(list.begin(), list.end(), anchor);
    if (it == list.end()) throw StructuralError("cover list lost element " + std::to_string(anchor));
    list.insert(after ? it + 1 : it, id);
}

struct Lists {
    CoverLists upper;
    CoverLists lower;

    explicit Lists(const Diagram& d) : upper(d.size()), lower(d.size()) {
        for (ElementId x = 0; x < d.size(); ++x) {
            const auto ups = d.upper_covers(x);
            const auto lows = d.lower_covers(x);
            upper[x].assign(ups.begin(), ups.end());
            lower[x].assign(lows.begin(), lows.end());
        }
    }

    ElementId add() {
        upper.emplace_back();
        lower.emplace_back();
        return static_cast<ElementId>(upper.size() - 1);
    }

    // Subdivides the edge [x, z] with the new element y.
    void split(ElementId x, ElementId z, ElementId y) {
        replace(upper[x], z, y);
        replace(lower[z], x, y);
        lower[y] = {x};
        upper[y] = {z};
    }

    Diagram build(std::optional<std::vector<Point>> layout = std::nullopt) const {
        return Diagram::from_cover_data(CoverData{upper, lower, std::move(layout)});
    }
};

// Propagates a fork split from the edge [u, w] (subdivided by v) down the
// staircase of original cells on one side, until no original cell lies below.
void fork_staircase(const Diagram& original, Lists& work, ElementId u, ElementId v, ElementId w,
                    bool leftward) {
    for (;;) {
        const auto lows = original.lower_covers(w);
        const auto pos = static_cast<std::size_t>(std::find(lows.begin(), lows.end(), u) - lows.begin());
        if (pos == lows.size()) throw StructuralError("fork staircase left the original diagram");
        const bool blocked = leftward ? pos + 1 < lows.size() : pos > 0;
        if (blocked)
            throw StructuralError("fork staircase at edge [" + std::to_string(u) + "," +
                                  std::to_string(w) + "] has an original cell on the wrong side");
        if (leftward ? pos == 0 : pos + 1 == lows.size()) return;
        const ElementId z = leftward ? lows[pos - 1] : lows[pos + 1];
        const ElementId x = original.meet(z, u);
        const auto& x_ups = work.upper[x];
        if (std::find(x_ups.begin(), x_ups.end(), z) == x_ups.end()) return;

        const ElementId y = work.add();
        work.split(x, z, y);
        if (leftward) {
            work.upper[y] = {z, v};
            insert_beside(work.lower[v], u, y, false);
        } else {
            work.upper[y] = {v, z};
            insert_beside(work.lower[v], u, y, true);
        }
        u = x;
        v = y;
        w = z;
    }
}

} // namespace

Diagram grid(int m, int n) {
    if (m < 2 || n < 2) throw ArgumentError("grid dimensions must be at least 2");
    std::vector<ElementId> id(static_cast<std::size_t>(m) * n);
    ElementId next = 0;
    for (int h = 0; h <= m + n - 2; ++h)
        for (int i = std::min(h, m - 1); i >= std::max(0, h - (n - 1)); --i) id[i * n + (h - i)] = next++;
    CoverLists upper(m * n);
    CoverLists lower(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const ElementId x = id[i * n + j];
            if (i + 1 < m) upper[x].push_back(id[(i + 1) * n + j]);
            if (j + 1 < n) upper[x].push_back(id[i * n + j + 1]);
            if (j > 0) lower[x].push_back(id[i * n + j - 1]);
            if (i > 0) lower[x].push_back(id[(i - 1) * n + j]);
        }
    return Diagram::from_cover_data(CoverData{upper, lower, std::nullopt});
}

Diagram chain(int n) {
    if (n < 1) throw ArgumentError("chain needs at least one element");
    CoverLists upper(n);
    for (int i = 0; i + 1 < n; ++i) upper[i] = {i + 1};
    return Diagram::from_upper_covers(upper);
}

Diagram make_mn(int n) {
    if (n < 3) throw ArgumentError("M_n needs n >= 3");
    CoverLists upper(n + 2);
    for (int i = 1; i <= n; ++i) {
        upper[0].push_back(i);
        upper[i] = {n + 1};
    }
    return Diagram::from_upper_covers(upper);
}

Diagram insert_fork(const Diagram& d, const FourCell& cell) {
    if (!is_cell(d, cell)) throw ArgumentError("insert_fork: not a 4-cell of the diagram");
    bool slim = false;
    try {
        slim = is_slim(d);
    } catch (const ArgumentError&) {
        slim = false;
    }
    if (!slim) throw ArgumentError("insert_fork requires a slim semimodular diagram");

    const auto [o, a, b, t] = cell;
    Lists work(d);
    const ElementId s = work.add();
    const ElementId left = work.add();
    const ElementId right = work.add();
    insert_beside(work.lower[t], a, s, true);
    work.upper[s] = {t};
    work.lower[s] = {left, right};
    work.split(o, a, left);
    work.upper[left] = {a, s};
    work.split(o, b, right);
    work.upper[right] = {s, b};

    fork_staircase(d, work, o, left, a, true);
    fork_staircase(d, work, o, right, b, false);
    return work.build();
}

std::vector<ElementId> corners(const Diagram& d) {
    std::vector<ElementId> out;
    const auto l = left_boundary(d);
    const auto r = right_boundary(d);
    for (ElementId x = 0; x < d.size(); ++x) {
        if (!is_doubly_irreducible(d, x)) continue;
        if (std::find(l.begin(), l.end(), x) == l.end() && std::find(r.begin(), r.end(), x) == r.end())
            continue;
        if (d.lower_covers(d.upper_covers(x)[0]).size() == 2 &&
            d.upper_covers(d.lower_covers(x)[0]).size() == 2)
            out.push_back(x);
    }
    return out;
}

Diagram remove_corner(const Diagram& d, ElementId x) {
    const auto cs = corners(d);
    if (std::find(cs.begin(), cs.end(), x) == cs.end())
        throw ArgumentError("remove_corner: element " + std::to_string(x) + " is not a corner");
    return remove_elements(d, std::span(&x, 1)).diagram;
}

EyeInsertion add_eye(const Diagram& d, const FourCell& cell) {
    if (!is_cell(d, cell)) throw ArgumentError("add_eye: not a 4-cell of the diagram");
    Lists work(d);
    const ElementId e = work.add();
    insert_beside(work.upper[cell.bottom], cell.left_mid, e, true);
    insert_beside(work.lower[cell.top], cell.left_mid, e, true);
    work.upper[e] = {cell.top};
    work.lower[e] = {cell.bottom};
    std::optional<std::vector<Point>> pts;
    if (d.layout()) {
        pts = *d.layout();
        const Point& pa = (*pts)[cell.left_mid];
        const Point& pb = (*pts)[cell.right_mid];
        pts->push_back({(pa.x + pb.x) / 2, (pa.y + pb.y) / 2});
    }
    return {work.build(std::move(pts)), e};
}

bool is_distributive(const Diagram& d) {
    const int n = d.size();
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            for (ElementId z = y + 1; z < n; ++z)
                if (d.meet(x, d.join(y, z)) != d.join(d.meet(x, y), d.meet(x, z))) return false;
    return true;
}

bool is_glued_sum_decomposable(const Diagram& d) {
    for (ElementId x = 0; x < d.size(); ++x) {
        if (x == d.bottom() || x == d.top()) continue;
        bool all = true;
        for (ElementId y = 0; y < d.size() && all; ++y) all = d.comparable(x, y);
        if (all) return true;
    }
    return false;
}

bool is_good(const Diagram& d, const GoodnessCriteria& criteria) {
    if (criteria.min_length && d.length() < *criteria.min_length) return false;
    if (criteria.max_length && d.length() > *criteria.max_length) return false;
    if (static_cast<int>(enumerate_cells(d).size()) < criteria.min_cells) return false;
    return !is_distributive(d) && !is_glued_sum_decomposable(d);
}

Diagram build_from_recipe(const BuildRecipe& recipe) {
    Diagram d = grid(recipe.grid_m, recipe.grid_n);
    for (const auto& cell : recipe.forks) d = insert_fork(d, cell);
    for (ElementId x : recipe.corners) d = remove_corner(d, x);
    for (const auto& cell : recipe.eyes) d = add_eye(d, cell).diagram;
    return d;
}

Generated random_slim(int length, int forks, int corner_removals, Rng& rng) {
    if (forks < 0 || corner_removals < 0 || length - forks < 2)
        throw ArgumentError("random_slim: need forks, corner_removals >= 0 and length - forks >= 2");
    BuildRecipe recipe;
    const int grid_length = length - forks;
    recipe.grid_m = rng.uniform_int(2, grid_length);
    recipe.grid_n = grid_length + 2 - recipe.grid_m;
    Diagram d = grid(recipe.grid_m, recipe.grid_n);
    for (int k = 0; k < forks; ++k) {
        const auto cells = enumerate_cells(d);
        const FourCell cell = cells[rng.uniform(cells.size())];
        d = insert_fork(d, cell);
        recipe.forks.push_back(cell);
    }
    for (int k = 0; k < corner_removals; ++k) {
        const auto cs = corners(d);
        if (cs.empty()) break;
        const ElementId x = cs[rng.uniform(cs.size())];
        d = remove_corner(d, x);
        recipe.corners.push_back(x);
        // Semimodular lattices satisfy the Jordan-Dedekind chain condition,
        // so removing a corner can never shorten the diagram.
        if (d.length() != length) throw StructuralError("corner removal changed the length");
    }
    return {std::move(d), std::move(recipe)};
}

Generated random_planar(int length, int forks, int corner_removals, int eye_count, Rng& rng) {
    Generated g = random_slim(length, forks, corner_removals, rng);
    for (int k = 0; k < eye_count; ++k) {
        const auto cells = enumerate_cells(g.diagram);
        if (cells.empty()) break;
        const FourCell cell = cells[rng.uniform(cells.size())];
        g.diagram = add_eye(g.diagram, cell).diagram;
        g.recipe.eyes.push_back(cell);
    }
    return g;
}

Generated random_good(int length, Rng& rng, const GoodnessCriteria& criteria, int max_attempts) {
    if (length < 2) throw ArgumentError("random_good: length must be at least 2");
    GoodnessCriteria exact = criteria;
    exact.min_length = exact.max_length = length;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const int forks = length >= 3 ? rng.uniform_int(1, length - 2) : 0;
        const int removals = rng.uniform_int(0, 2);
        Generated g = random_slim(length, forks, removals, rng);
        if (is_good(g.diagram, exact)) return g;
    }
    throw GenerationError("random_good: no good diagram of length " + std::to_string(length) +
                          " after " + std::to_string(max_attempts) + " attempts");
}

} // namespace swinglat
