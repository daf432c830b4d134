#include "swinglat/corpus.hpp"

namespace swinglat {

Diagram s7() {
    return Diagram::from_upper_covers({{1, 2}, {3, 4}, {4, 5}, {6}, {6}, {6}, {}});
}

std::vector<CorpusEntry> named_lattices() {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, Diagram d) { out.push_back({std::move(name), std::move(d), std::nullopt}); };
    add("chain2", chain(2));
    add("chain3", chain(3));
    add("grid(2,2)", grid(2, 2));
    add("grid(2,3)", grid(2, 3));
    add("grid(3,3)", grid(3, 3));
    add("grid(4,3)", grid(4, 3));
    add("S7", s7());
    for (int n = 3; n <= 6; ++n) add("M" + std::to_string(n), make_mn(n));
    const Diagram s = s7();
    add("S7+eye(xl,a,m,top)", add_eye(s, {1, 3, 4, 6}).diagram);
    add("S7+eye(0,xl,xr,m)", add_eye(s, {0, 1, 2, 4}).diagram);
    add("grid(2,3)+eye", add_eye(grid(2, 3), enumerate_cells(grid(2, 3)).front()).diagram);
    return out;
}

std::vector<CorpusEntry> random_corpus(const CorpusOptions& options) {
    std::vector<CorpusEntry> out;
    for (int i = 0; i < options.count; ++i) {
        Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
        for (;;) {
            const int length = rng.uniform_int(options.min_length, options.max_length);
            const int forks = rng.uniform_int(0, length - 2);
            const int removals = rng.uniform_int(0, options.max_corner_removals);
            const int eye_count = options.max_eyes > 0 ? rng.uniform_int(0, options.max_eyes) : 0;
            Generated g = random_planar(length, forks, removals, eye_count, rng);
            if (g.diagram.size() > options.max_size) continue;
            g.recipe.seed = options.seed;
            out.push_back({"random#" + std::to_string(i), std::move(g.diagram), std::move(g.recipe)});
            break;
        }
    }
    return out;
}

} // namespace swinglat
