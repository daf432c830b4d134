#include "swinglat/swing.hpp"

#include <algorithm>
#include <chrono>
#include <deque>

namespace swinglat {

std::string_view to_string(StepKind kind) {
    switch (kind) {
        case StepKind::CellPerspective: return "cell-perspective";
        case StepKind::Swing: return "swing";
        case StepKind::StrongSwing: return "strong-swing";
        case StepKind::Tilt: return "tilt";
    }
    return "?";
}

std::string_view to_string(SequenceVariant variant) {
    switch (variant) {
        case SequenceVariant::SL: return "SL";
        case SequenceVariant::SSL: return "SSL";
        case SequenceVariant::SS: return "SS";
        case SequenceVariant::UpwardCP: return "UpwardCP";
    }
    return "?";
}

std::optional<SequenceVariant> parse_variant(std::string_view name) {
    for (auto v : {SequenceVariant::SL, SequenceVariant::SSL, SequenceVariant::SS, SequenceVariant::UpwardCP})
        if (to_string(v) == name) return v;
    return std::nullopt;
}

namespace {

int variant_slot(SequenceVariant v) { return static_cast<int>(v); }

bool interior(std::span<const ElementId> list, ElementId x) {
    return list.size() >= 3 && list.front() != x && list.back() != x;
}

} // namespace

bool SpanIndex::spans(ElementId u, ElementId v) const {
    if (u < 0 || v < 0 || u >= static_cast<int>(reach_.size()) || v >= static_cast<int>(reach_.size()))
        throw ArgumentError("spans: element out of range");
    return reach_[u][v];
}

SwingAnalysis::SwingAnalysis(Diagram d) : d_(std::move(d)), cells_(enumerate_cells(d_)) {
    const auto& edges = d_.edges();
    cells_of_edge_.resize(edges.size());
    for (std::size_t c = 0; c < cells_.size(); ++c) {
        const FourCell& cell = cells_[c];
        for (PrimeInterval side : {cell.lower_left(), cell.lower_right(), cell.upper_left(), cell.upper_right()})
            cells_of_edge_[*d_.edge_index(side)].push_back(static_cast<int>(c));
    }
    eye_.assign(d_.size(), 0);
    for (ElementId x : eyes(d_)) eye_[x] = 1;

    for (auto variant : {SequenceVariant::SL, SequenceVariant::SSL, SequenceVariant::SS, SequenceVariant::UpwardCP}) {
        const int slot = variant_slot(variant);
        steps_[slot].resize(edges.size());
        succ_[slot].resize(edges.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const PrimeInterval r = edges[e];
            auto& out = steps_[slot][e];
            auto add = [&](const std::vector<Target>& targets, StepKind kind) {
                for (const auto& [s, cell] : targets) out.push_back({r, s, kind, cell});
            };
            switch (variant) {
                case SequenceVariant::SL:
                    add(cell_perspective_targets(r), StepKind::CellPerspective);
                    add(swing_targets(r), StepKind::Swing);
                    add(tilt_targets(r), StepKind::Tilt);
                    break;
                case SequenceVariant::SSL:
                    add(cell_perspective_targets(r), StepKind::CellPerspective);
                    add(strong_swing_targets(r), StepKind::StrongSwing);
                    add(tilt_targets(r), StepKind::Tilt);
                    break;
                case SequenceVariant::SS:
                    add(cell_perspective_targets(r), StepKind::CellPerspective);
                    add(swing_targets(r), StepKind::Swing);
                    break;
                case SequenceVariant::UpwardCP:
                    add(upward_targets(r), StepKind::CellPerspective);
                    break;
            }
            for (const Step& step : out) {
                const int target = *d_.edge_index(step.to);
                auto& succ = succ_[slot][e];
                if (std::find(succ.begin(), succ.end(), target) == succ.end()) succ.push_back(target);
            }
        }
    }
}

int SwingAnalysis::require_edge(PrimeInterval e) const {
    const auto idx = d_.edge_index(e);
    if (!idx)
        throw ArgumentError("[" + std::to_string(e.lower) + "," + std::to_string(e.upper) + "] is not an edge");
    return *idx;
}

std::vector<FourCell> SwingAnalysis::cells_with_side(PrimeInterval e) const {
    std::vector<FourCell> out;
    for (int c : cells_of_edge_[require_edge(e)]) out.push_back(cells_[c]);
    return out;
}

std::vector<Target> SwingAnalysis::cell_perspective_targets(PrimeInterval r) const {
    std::vector<Target> out;
    for (const FourCell& cell : cells_with_side(r)) out.emplace_back(cell.opposite(r), cell);
    return out;
}

std::vector<Target> SwingAnalysis::swing_targets(PrimeInterval r) const {
    std::vector<Target> out;
    const auto siblings = d_.lower_covers(r.upper);
    if (siblings.size() < 3) return out;
    for (const FourCell& cell : cells_with_side(r)) {
        if (cell.top != r.upper) continue;
        const PrimeInterval s = r.lower == cell.left_mid ? cell.upper_right() : cell.upper_left();
        if (interior(siblings, s.lower)) out.emplace_back(s, cell);
    }
    return out;
}

std::vector<Target> SwingAnalysis::strong_swing_targets(PrimeInterval r) const {
    auto out = swing_targets(r);
    if (eye_[r.lower])
        std::erase_if(out, [&](const Target& t) { return !eye_[t.first.lower]; });
    return out;
}

std::vector<Target> SwingAnalysis::tilt_targets(PrimeInterval r) const {
    std::vector<Target> out;
    const auto siblings = d_.upper_covers(r.lower);
    if (siblings.size() < 3) return out;
    for (const FourCell& cell : cells_with_side(r)) {
        if (cell.bottom != r.lower) continue;
        const PrimeInterval s = r.upper == cell.left_mid ? cell.lower_right() : cell.lower_left();
        if (interior(siblings, s.upper)) out.emplace_back(s, cell);
    }
    return out;
}

std::vector<Target> SwingAnalysis::upward_targets(PrimeInterval r) const {
    std::vector<Target> out;
    for (const FourCell& cell : cells_with_side(r))
        if (r.lower == cell.bottom) out.emplace_back(cell.opposite(r), cell);
    return out;
}

const std::vector<Step>& SwingAnalysis::steps(PrimeInterval r, SequenceVariant variant) const {
    return steps_[variant_slot(variant)][require_edge(r)];
}

std::vector<bool> SwingAnalysis::reachable_mask(PrimeInterval p, SequenceVariant variant) const {
    const auto& succ = succ_[variant_slot(variant)];
    std::vector<bool> seen(d_.edges().size(), false);
    std::vector<int> queue{require_edge(p)};
    seen[queue[0]] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int next : succ[queue[i]])
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
    return seen;
}

std::vector<PrimeInterval> SwingAnalysis::reachable(PrimeInterval p, SequenceVariant variant) const {
    const auto mask = reachable_mask(p, variant);
    std::vector<PrimeInterval> out;
    for (std::size_t e = 0; e < mask.size(); ++e)
        if (mask[e]) out.push_back(d_.edges()[e]);
    return out;
}

std::optional<StepSequence> SwingAnalysis::find_sequence(PrimeInterval p, PrimeInterval q,
                                                         SequenceVariant variant) const {
    const int start = require_edge(p);
    const int goal = require_edge(q);
    const auto& all_steps = steps_[variant_slot(variant)];
    std::vector<const Step*> parent(d_.edges().size(), nullptr);
    std::vector<bool> seen(d_.edges().size(), false);
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty() && !seen[goal]) {
        const int e = queue.front();
        queue.pop_front();
        for (const Step& step : all_steps[e]) {
            const int next = *d_.edge_index(step.to);
            if (seen[next]) continue;
            seen[next] = true;
            parent[next] = &step;
            queue.push_back(next);
        }
    }
    if (!seen[goal]) return std::nullopt;
    StepSequence seq;
    for (int e = goal; e != start; e = *d_.edge_index(parent[e]->from)) seq.steps.push_back(*parent[e]);
    std::reverse(seq.steps.begin(), seq.steps.end());
    seq.edges.push_back(p);
    for (const Step& step : seq.steps) seq.edges.push_back(step.to);
    return seq;
}

SpanIndex SwingAnalysis::span_index(PrimeInterval r, SequenceVariant variant) const {
    const auto mask = reachable_mask(r, variant);
    const int n = d_.size();
    std::vector<ElementId> by_height(n);
    for (ElementId x = 0; x < n; ++x) by_height[x] = x;
    std::sort(by_height.begin(), by_height.end(),
              [&](ElementId a, ElementId b) { return d_.height(a) > d_.height(b); });
    SpanIndex index;
    index.reach_.assign(n, std::vector<bool>(n, false));
    for (ElementId u : by_height) {
        auto& row = index.reach_[u];
        row[u] = true;
        for (ElementId c : d_.upper_covers(u)) {
            if (!mask[*d_.edge_index({u, c})]) continue;
            const auto& above = index.reach_[c];
            for (ElementId v = 0; v < n; ++v)
                if (above[v]) row[v] = true;
        }
    }
    return index;
}

bool SwingAnalysis::spans(PrimeInterval r, ElementId u, ElementId v, SequenceVariant variant) const {
    if (!d_.leq(u, v)) throw ArgumentError("spans: requires u <= v");
    return span_index(r, variant).spans(u, v);
}

Partition SwingAnalysis::span_relation(PrimeInterval p, SequenceVariant variant) const {
    const int n = d_.size();
    const SpanIndex index = span_index(p, variant);
    auto related = [&](ElementId x, ElementId y) { return index.spans(d_.meet(x, y), d_.join(x, y)); };
    std::vector<int> label(n);
    for (ElementId x = 0; x < n; ++x) {
        label[x] = x;
        for (ElementId y = 0; y < x; ++y)
            if (related(x, y)) {
                label[x] = label[y];
                break;
            }
    }
    Partition result = Partition::from_labels(label);
    for (const auto& block : result.blocks())
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!related(block[i], block[j]))
                    throw StructuralError("span relation is not transitive at (" + std::to_string(block[i]) +
                                          "," + std::to_string(block[j]) + ")");
    return result;
}

bool up_perspective(const Diagram& d, PrimeInterval p, PrimeInterval q) {
    return d.join(p.upper, q.lower) == q.upper && d.meet(p.upper, q.lower) == p.lower;
}

std::vector<Target> cell_perspective_targets(const Diagram& d, PrimeInterval r) {
    return SwingAnalysis(d).cell_perspective_targets(r);
}
std::vector<Target> swing_targets(const Diagram& d, PrimeInterval r) { return SwingAnalysis(d).swing_targets(r); }
std::vector<Target> strong_swing_targets(const Diagram& d, PrimeInterval r) {
    return SwingAnalysis(d).strong_swing_targets(r);
}
std::vector<Target> tilt_targets(const Diagram& d, PrimeInterval r) { return SwingAnalysis(d).tilt_targets(r); }
std::vector<PrimeInterval> reachable(const Diagram& d, PrimeInterval p, SequenceVariant variant) {
    return SwingAnalysis(d).reachable(p, variant);
}
std::optional<StepSequence> find_sequence(const Diagram& d, PrimeInterval p, PrimeInterval q,
                                          SequenceVariant variant) {
    return SwingAnalysis(d).find_sequence(p, q, variant);
}
bool spans(const Diagram& d, PrimeInterval r, ElementId u, ElementId v, SequenceVariant variant) {
    return SwingAnalysis(d).spans(r, u, v, variant);
}
Partition span_relation(const Diagram& d, PrimeInterval p, SequenceVariant variant) {
    return SwingAnalysis(d).span_relation(p, variant);
}

SwingLemmaReport verify_swing_lemma(const SwingAnalysis& analysis) {
    const auto start = std::chrono::steady_clock::now();
    const Diagram& d = analysis.diagram();
    const auto& edges = d.edges();
    SwingLemmaReport report;
    report.edges = static_cast<int>(edges.size());
    for (const PrimeInterval p : edges) {
        const Partition con = principal_congruence(d, p);
        const auto sl = analysis.reachable_mask(p, SequenceVariant::SL);
        const auto ssl = analysis.reachable_mask(p, SequenceVariant::SSL);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const PrimeInterval q = edges[e];
            const bool a = collapses(con, q.lower, q.upper);
            ++report.pairs;
            report.collapsed_pairs += a;
            report.sl_pairs += sl[e];
            report.ssl_pairs += ssl[e];
            if (a != sl[e] || a != ssl[e])
                report.discrepancies.push_back(
                    {p, q, a, sl[e], ssl[e], analysis.find_sequence(p, q, SequenceVariant::SL)});
        }
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SwingLemmaReport verify_swing_lemma(const Diagram& d) { return verify_swing_lemma(SwingAnalysis(d)); }

} // namespace swinglat
