#include "swinglat/properties.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "swinglat/builder.hpp"

namespace swinglat {

namespace {

std::string edge_str(PrimeInterval e) {
    return "[" + std::to_string(e.lower) + "," + std::to_string(e.upper) + "]";
}

bool slim_input(const Diagram& d) { return eyes(d).empty() && is_slim(d); }

} // namespace

PropertyResult check_swing_lemma(const SwingAnalysis& a) {
    PropertyResult r;
    r.name = "swing_lemma";
    const auto report = verify_swing_lemma(a);
    r.checks = report.pairs;
    for (const auto& x : report.discrepancies) {
        std::ostringstream s;
        s << "p=" << edge_str(x.p) << " q=" << edge_str(x.q) << " A=" << x.collapsed << " B=" << x.sl_reachable
          << " C=" << x.ssl_reachable;
        r.failures.push_back(s.str());
    }
    return r;
}

PropertyResult check_slim_coincidence(const SwingAnalysis& a) {
    PropertyResult r;
    r.name = "slim_coincidence";
    const Diagram& d = a.diagram();
    if (!slim_input(d)) {
        r.skipped = true;
        return r;
    }
    for (const PrimeInterval p : d.edges()) {
        ++r.checks;
        if (!a.tilt_targets(p).empty()) r.failures.push_back("tilt from " + edge_str(p));
        const auto sl = a.reachable_mask(p, SequenceVariant::SL);
        const auto ssl = a.reachable_mask(p, SequenceVariant::SSL);
        const auto ss = a.reachable_mask(p, SequenceVariant::SS);
        for (std::size_t e = 0; e < sl.size(); ++e) {
            ++r.checks;
            if (sl[e] != ssl[e] || sl[e] != ss[e])
                r.failures.push_back("reachability differs for p=" + edge_str(p) + " q=" + edge_str(d.edges()[e]));
        }
    }
    return r;
}

PropertyResult check_oracle_minimality(const SwingAnalysis& a, int max_size) {
    PropertyResult r;
    r.name = "oracle_minimality";
    const Diagram& d = a.diagram();
    if (d.size() > max_size) {
        r.skipped = true;
        return r;
    }
    for (const PrimeInterval p : d.edges()) {
        ++r.checks;
        const ElementPair seed{p.lower, p.upper};
        if (!(principal_congruence(d, p) == least_congruence_by_enumeration(d, std::span(&seed, 1))))
            r.failures.push_back("con" + edge_str(p) + " differs from the enumerated least congruence");
    }
    return r;
}

PropertyResult check_spanning(const SwingAnalysis& a) {
    PropertyResult r;
    r.name = "spanning";
    const Diagram& d = a.diagram();
    std::vector<SequenceVariant> variants{SequenceVariant::SSL};
    if (slim_input(d)) variants.push_back(SequenceVariant::SS);
    for (const PrimeInterval e : d.edges())
        for (const auto variant : variants) {
            const SpanIndex index = a.span_index(e, variant);
            for (ElementId c = 0; c < d.size(); ++c) {
                ++r.checks;
                if (!index.spans(d.meet(e.lower, c), d.meet(e.upper, c)))
                    r.failures.push_back(edge_str(e) + " does not " + std::string(to_string(variant)) +
                                         "-span [a^c,b^c] for c=" + std::to_string(c));
            }
        }
    return r;
}

PropertyResult check_beta(const SwingAnalysis& a) {
    PropertyResult r;
    r.name = "beta";
    const Diagram& d = a.diagram();
    for (const PrimeInterval p : d.edges()) {
        ++r.checks;
        try {
            const Partition beta = a.span_relation(p, SequenceVariant::SSL);
            if (!is_congruence(d, beta)) r.failures.push_back("beta(" + edge_str(p) + ") is not a congruence");
            if (!(beta == principal_congruence(d, p))) r.failures.push_back("beta(" + edge_str(p) + ") != con(p)");
        } catch (const StructuralError& e) {
            r.failures.push_back("beta(" + edge_str(p) + "): " + e.what());
        }
    }
    return r;
}

PropertyResult check_perspectivity(const SwingAnalysis& a) {
    PropertyResult r;
    r.name = "perspectivity";
    const Diagram& d = a.diagram();
    for (const PrimeInterval p : d.edges()) {
        const auto up = a.reachable_mask(p, SequenceVariant::UpwardCP);
        for (std::size_t e = 0; e < up.size(); ++e) {
            ++r.checks;
            const PrimeInterval q = d.edges()[e];
            const bool persp = up_perspective(d, p, q);
            if (persp != up[e])
                r.failures.push_back(edge_str(p) + (persp ? " is up-perspective to " : " is not up-perspective to ") +
                                     edge_str(q) + (up[e] ? " but reaches it upward" : " but cannot reach it upward"));
        }
    }
    return r;
}

PropertyResult check_sequence_order(const SwingAnalysis& a, int max_size, int max_steps) {
    PropertyResult r;
    r.name = "sequence_order";
    const Diagram& d = a.diagram();
    if (d.size() > max_size || !slim_input(d)) {
        r.skipped = true;
        return r;
    }
    std::vector<PrimeInterval> path;
    std::function<void(bool)> extend = [&](bool all_up_so_far) {
        if (static_cast<int>(path.size()) > max_steps) return;
        for (const Step& step : a.steps(path.back(), SequenceVariant::SS)) {
            if (std::find(path.begin(), path.end(), step.to) != path.end()) continue;
            ++r.checks;
            const bool up = up_perspective(d, path.back(), step.to);
            if (up && !all_up_so_far) {
                std::string seq;
                for (auto e : path) seq += edge_str(e) + " ";
                r.failures.push_back("up-perspective step after a non-upward one: " + seq + edge_str(step.to));
            }
            path.push_back(step.to);
            extend(all_up_so_far && up);
            path.pop_back();
        }
    };
    for (const PrimeInterval p : d.edges()) {
        path = {p};
        extend(true);
    }
    return r;
}

PropertyResult check_mn_cyclic(int n) {
    PropertyResult r;
    r.name = "mn_cyclic";
    const Diagram m = make_mn(n);
    const SwingAnalysis a(m);
    for (const PrimeInterval p : m.edges()) {
        ++r.checks;
        const auto mask = a.reachable_mask(p, SequenceVariant::SSL);
        if (std::find(mask.begin(), mask.end(), false) != mask.end())
            r.failures.push_back("M" + std::to_string(n) + ": SSL closure of " + edge_str(p) + " misses an edge");
        if (principal_congruence(m, p).block_count() != 1)
            r.failures.push_back("M" + std::to_string(n) + ": con" + edge_str(p) + " is not the full relation");
    }
    return r;
}

PropertyResult check_stored_reachable(const SwingAnalysis& a,
                                      const std::map<PrimeInterval, std::vector<PrimeInterval>>& stored) {
    PropertyResult r;
    r.name = "stored_reachable";
    const Diagram& d = a.diagram();
    for (const auto& [p, edges] : stored) {
        const Partition con = principal_congruence(d, p);
        for (const PrimeInterval q : d.edges()) {
            ++r.checks;
            const bool listed = std::find(edges.begin(), edges.end(), q) != edges.end();
            if (listed != collapses(con, q.lower, q.upper))
                r.failures.push_back("p=" + edge_str(p) + " q=" + edge_str(q) + " A=" +
                                     std::to_string(!listed) + " stored=" + std::to_string(listed));
        }
    }
    return r;
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names{"swing_lemma", "slim_coincidence", "oracle_minimality", "spanning",
                                                "beta",        "perspectivity",    "sequence_order"};
    return names;
}

PropertyResult run_property(const std::string& name, const SwingAnalysis& a) {
    if (name == "swing_lemma") return check_swing_lemma(a);
    if (name == "slim_coincidence") return check_slim_coincidence(a);
    if (name == "oracle_minimality") return check_oracle_minimality(a);
    if (name == "spanning") return check_spanning(a);
    if (name == "beta") return check_beta(a);
    if (name == "perspectivity") return check_perspectivity(a);
    if (name == "sequence_order") return check_sequence_order(a);
    throw ArgumentError("unknown property: " + name);
}

} // namespace swinglat
