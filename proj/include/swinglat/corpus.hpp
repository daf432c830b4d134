#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swinglat/builder.hpp"

namespace swinglat {

struct CorpusEntry {
    std::string name;
    Diagram diagram;
    std::optional<BuildRecipe> recipe;
};

/// S7 with ids 0, xl, xr, a, m, b, top = 0..6.
Diagram s7();

/// Small hand-named diagrams: chains, grids, M_n, S7 and their eye extensions.
std::vector<CorpusEntry> named_lattices();

struct CorpusOptions {
    int count = 200;
    std::uint64_t seed = 1;
    int min_length = 2;
    int max_length = 8;
    int max_size = 60;
    int max_corner_removals = 3;
    int max_eyes = 4;  // 0 yields slim lattices only
};

/// Seeded random_slim outputs (plus eyes when max_eyes > 0), resampled until
/// they fit max_size. Entry i depends only on (seed, i).
std::vector<CorpusEntry> random_corpus(const CorpusOptions& options);

} // namespace swinglat
