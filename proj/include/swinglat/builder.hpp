#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swinglat/diagram.hpp"
#include "swinglat/rng.hpp"

namespace swinglat {

/// Replayable description of a generated diagram: grid, then forks, then
/// corner removals, then eyes. Cells and corners are given by the element
/// ids current at the time each step is applied.
struct BuildRecipe {
    int grid_m = 2;
    int grid_n = 2;
    std::vector<FourCell> forks;
    std::vector<ElementId> corners;
    std::vector<FourCell> eyes;
    std::uint64_t seed = 0;

    bool operator==(const BuildRecipe&) const = default;
};

struct Generated {
    Diagram diagram;
    BuildRecipe recipe;
};

/// C_m × C_n. Ids run by height, left to right within a height; the
/// first-coordinate successor is the left upper cover.
Diagram grid(int m, int n);

/// Chain with n elements.
Diagram chain(int n);

/// Bottom 0, atoms 1..n left to right, top n+1.
Diagram make_mn(int n);

/// Inserts a fork into a cell of a slim semimodular diagram. New elements get
/// ids size(), size()+1, ...: first the interior element, then the left and
/// right lower covers of it, then the staircase elements.
Diagram insert_fork(const Diagram& d, const FourCell& cell);

std::vector<ElementId> corners(const Diagram& d);
Diagram remove_corner(const Diagram& d, ElementId x);

struct EyeInsertion {
    Diagram diagram;
    ElementId eye;
};
/// Adds a new element strictly inside the cell; its id is d.size().
EyeInsertion add_eye(const Diagram& d, const FourCell& cell);

bool is_distributive(const Diagram& d);
bool is_glued_sum_decomposable(const Diagram& d);

struct GoodnessCriteria {
    int min_cells = 4;
    std::optional<int> min_length;
    std::optional<int> max_length;
};
bool is_good(const Diagram& d, const GoodnessCriteria& criteria = {});

Diagram build_from_recipe(const BuildRecipe& recipe);

/// Grid of length (length - forks), then `forks` forks into uniformly chosen
/// cells, then up to `corner_removals` uniformly chosen corners.
Generated random_slim(int length, int forks, int corner_removals, Rng& rng);

/// random_slim followed by `eye_count` eyes, each in a uniformly chosen cell.
Generated random_planar(int length, int forks, int corner_removals, int eye_count, Rng& rng);

/// Rejection-samples random_slim until is_good holds.
Generated random_good(int length, Rng& rng, const GoodnessCriteria& criteria = {},
                      int max_attempts = 1000);

} // namespace swinglat
