#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "swinglat/builder.hpp"
#include "swinglat/swing.hpp"

using namespace swinglat;
using namespace fixtures;

namespace {

std::vector<PrimeInterval> edges_of(const std::vector<Target>& targets) {
    std::vector<PrimeInterval> out;
    for (const auto& t : targets) out.push_back(t.first);
    std::sort(out.begin(), out.end());
    return out;
}

using Edges = std::vector<PrimeInterval>;

} // namespace

TEST_CASE("cell-perspectivity") {
    const auto s = cell_perspective_targets(s7(), {xl, a});
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == PrimeInterval{m, top});
    CHECK(s[0].second == FourCell{xl, a, m, top});

    CHECK(edges_of(cell_perspective_targets(grid(2, 2), {0, 1})) == Edges{{2, 3}});

    const auto m4 = cell_perspective_targets(make_mn(4), {2, 5});
    REQUIRE(m4.size() == 2);
    CHECK(std::find(m4.begin(), m4.end(), Target{{0, 1}, {0, 1, 2, 5}}) != m4.end());
    CHECK(std::find(m4.begin(), m4.end(), Target{{0, 3}, {0, 2, 3, 5}}) != m4.end());
}

TEST_CASE("swings") {
    CHECK(edges_of(swing_targets(s7(), {a, top})) == Edges{{m, top}});
    CHECK(swing_targets(s7(), {m, top}).empty());
    CHECK(edges_of(swing_targets(make_mn(4), {1, 5})) == Edges{{2, 5}});
    const Diagram square = grid(2, 2);
    for (const auto& e : square.edges()) CHECK(swing_targets(square, e).empty());
}

TEST_CASE("tilts") {
    CHECK(edges_of(tilt_targets(make_mn(4), {0, 1})) == Edges{{0, 2}});
    CHECK(edges_of(tilt_targets(make_mn(3), {0, 3})) == Edges{{0, 2}});
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const Diagram d = random_slim(5, 2, 1, rng).diagram;
        for (const auto& e : d.edges()) CHECK(tilt_targets(d, e).empty());
    }
}

TEST_CASE("strong swings") {
    CHECK(edges_of(strong_swing_targets(make_mn(4), {2, 5})) == Edges{{3, 5}});
    CHECK(edges_of(strong_swing_targets(make_mn(4), {1, 5})) == Edges{{2, 5}});
    Rng rng(6);
    for (int i = 0; i < 20; ++i) {
        const SwingAnalysis an(random_slim(5, 2, 1, rng).diagram);
        for (const auto& e : an.diagram().edges())
            CHECK(edges_of(an.strong_swing_targets(e)) == edges_of(an.swing_targets(e)));
    }
}

TEST_CASE("reachability") {
    const Edges s7_expected{{xl, a}, {xr, b}, {m, top}};
    auto sorted = [](Edges e) {
        std::sort(e.begin(), e.end());
        return e;
    };
    CHECK(sorted(reachable(s7(), {xl, a}, SequenceVariant::SL)) == s7_expected);
    CHECK(reachable(make_mn(6), {0, 3}, SequenceVariant::SSL).size() == 12);
    CHECK(sorted(reachable(grid(2, 2), {0, 1}, SequenceVariant::SS)) == Edges{{0, 1}, {2, 3}});
}

TEST_CASE("witness sequences") {
    const auto seq = find_sequence(s7(), {xl, a}, {m, top}, SequenceVariant::SL);
    REQUIRE(seq);
    CHECK(seq->edges == Edges{{xl, a}, {m, top}});
    REQUIRE(seq->steps.size() == 1);
    CHECK(seq->steps[0].kind == StepKind::CellPerspective);

    const auto same = find_sequence(s7(), {xl, a}, {xl, a}, SequenceVariant::SL);
    REQUIRE(same);
    CHECK(same->edges.size() == 1);
    CHECK(same->steps.empty());

    CHECK_FALSE(find_sequence(grid(2, 2), {0, 1}, {0, 2}, SequenceVariant::SL));

    // Every consecutive pair of a witness is a single allowed step.
    const SwingAnalysis an(make_mn(5));
    for (const auto& q : an.diagram().edges()) {
        const auto w = an.find_sequence({0, 1}, q, SequenceVariant::SSL);
        REQUIRE(w);
        for (std::size_t i = 0; i < w->steps.size(); ++i) {
            const auto& options = an.steps(w->edges[i], SequenceVariant::SSL);
            CHECK(std::find(options.begin(), options.end(), w->steps[i]) != options.end());
            CHECK(w->steps[i].to == w->edges[i + 1]);
        }
    }
    CHECK_THROWS_AS(an.find_sequence({0, 6}, {0, 1}, SequenceVariant::SL), ArgumentError);
}

TEST_CASE("up-perspectivity") {
    CHECK(up_perspective(grid(2, 2), {0, 1}, {2, 3}));
    CHECK(up_perspective(s7(), {xl, a}, {xl, a}));
    CHECK_FALSE(up_perspective(s7(), {0, xl}, {m, top}));
}

TEST_CASE("spanning") {
    const Diagram d = s7();
    for (ElementId u = 0; u < d.size(); ++u)
        for (auto v : {SequenceVariant::SL, SequenceVariant::SSL, SequenceVariant::SS})
            CHECK(spans(d, {xl, a}, u, u, v));
    CHECK(spans(d, {xl, a}, xr, b, SequenceVariant::SL));
    CHECK_FALSE(spans(d, {xl, a}, 0, xl, SequenceVariant::SL));
    CHECK_FALSE(spans(d, {xl, a}, xl, top, SequenceVariant::SSL));  // needs [a,top] or [xl,m]
    CHECK_THROWS_AS(spans(d, {xl, a}, a, b, SequenceVariant::SL), ArgumentError);
}

TEST_CASE("span relation") {
    CHECK(span_relation(s7(), {xl, a}, SequenceVariant::SSL) ==
          Partition::from_blocks(7, {{0}, {xl, a}, {xr, b}, {m, top}}));
    CHECK(span_relation(grid(2, 2), {0, 1}, SequenceVariant::SSL) == Partition::from_blocks(4, {{0, 1}, {2, 3}}));
    const Diagram d = make_mn(4);
    for (const auto& p : d.edges()) CHECK(span_relation(d, p, SequenceVariant::SSL).same_block(p.lower, p.upper));
}

TEST_CASE("swing lemma on fixtures") {
    const auto s = verify_swing_lemma(s7());
    CHECK(s.ok());
    CHECK(s.edges == 9);
    CHECK(s.pairs == 81);

    const auto m6 = verify_swing_lemma(make_mn(6));
    CHECK(m6.ok());
    CHECK(m6.collapsed_pairs == m6.pairs);
    CHECK(m6.ssl_pairs == m6.pairs);

    CHECK(verify_swing_lemma(grid(4, 3)).ok());
}

TEST_CASE("variant names") {
    for (auto v : {SequenceVariant::SL, SequenceVariant::SSL, SequenceVariant::SS, SequenceVariant::UpwardCP})
        CHECK(parse_variant(to_string(v)) == v);
    CHECK_FALSE(parse_variant("SG"));
}
