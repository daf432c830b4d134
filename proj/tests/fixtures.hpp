#pragma once

#include "swinglat/corpus.hpp"
#include "swinglat/diagram.hpp"

namespace fixtures {

// Element names of swinglat::s7().
inline constexpr swinglat::ElementId xl = 1, xr = 2, a = 3, m = 4, b = 5, top = 6;

// The pentagon 0 < p < q < 1, 0 < r < 1.
inline swinglat::Diagram n5() { return swinglat::Diagram::from_upper_covers({{1, 3}, {2}, {4}, {4}, {}}); }

// Two covering squares glued at one element.
inline swinglat::Diagram stacked_squares() {
    return swinglat::Diagram::from_upper_covers({{1, 2}, {3}, {3}, {4, 5}, {6}, {6}, {}});
}

} // namespace fixtures
