#include <map>

#include "swinglat/congruence.hpp"

namespace swinglat {

std::vector<Partition> all_congruences(const Diagram& d) {
    const int n = d.size();
    if (n > 12) throw ArgumentError("all_congruences: diagram too large for enumeration");
    std::vector<Partition> out;
    // Restricted growth strings enumerate every set partition once.
    std::vector<int> label(n, 0);
    std::vector<int> prefix_max(n, 0);
    for (;;) {
        Partition p = Partition::from_labels(label);
        if (is_congruence(d, p)) out.push_back(std::move(p));
        int i = n - 1;
        while (i > 0 && label[i] > prefix_max[i - 1]) --i;
        if (i <= 0) break;
        ++label[i];
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (int k = i + 1; k < n; ++k) {
            label[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
    return out;
}

Partition least_congruence_by_enumeration(const Diagram& d, std::span<const ElementPair> pairs) {
    const int n = d.size();
    std::vector<int> label(n, 0);
    for (const auto& theta : all_congruences(d)) {
        bool contains = true;
        for (const auto& [x, y] : pairs) contains = contains && theta.same_block(x, y);
        if (!contains) continue;
        std::map<std::pair<int, int>, int> refined;
        for (int x = 0; x < n; ++x) {
            auto key = std::make_pair(label[x], static_cast<int>(theta.representative(x)));
            auto [it, inserted] = refined.emplace(key, static_cast<int>(refined.size()));
            label[x] = it->second;
        }
    }
    return Partition::from_labels(label);
}

} // namespace swinglat
