#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "swinglat/builder.hpp"

using namespace swinglat;
using namespace fixtures;

namespace {

bool slim_semimodular(const Diagram& d) { return is_semimodular(d) && is_slim(d); }

} // namespace

TEST_CASE("grids") {
    const Diagram sq = grid(2, 2);
    CHECK(sq.size() == 4);
    CHECK(enumerate_cells(sq).size() == 1);
    CHECK(sq.upper_covers(0)[0] == 1);

    const Diagram g33 = grid(3, 3);
    CHECK(g33.size() == 9);
    CHECK(enumerate_cells(g33).size() == 4);
    CHECK(g33.length() == 4);

    const Diagram g25 = grid(2, 5);
    CHECK(g25.size() == 10);
    CHECK(enumerate_cells(g25).size() == 4);
    CHECK_THROWS_AS(grid(1, 3), ArgumentError);
}

TEST_CASE("chains and M_n") {
    CHECK(chain(4).length() == 3);
    CHECK(make_mn(3).size() == 5);
    CHECK(make_mn(6).size() == 8);
    for (int n = 3; n <= 9; ++n) CHECK(make_mn(n).size() == n + 2);
    CHECK_THROWS_AS(make_mn(2), ArgumentError);
}

TEST_CASE("fork insertion") {
    SUBCASE("covering square becomes S7") {
        const Diagram f = insert_fork(grid(2, 2), {0, 1, 2, 3});
        CHECK(f.size() == 7);
        CHECK(canonically_equal(f, s7()));
    }

    SUBCASE("grid(3,2) cells") {
        const Diagram g = grid(3, 2);
        const auto cells = enumerate_cells(g);
        REQUIRE(cells.size() == 2);
        // Bottom cell: the staircase stops immediately, one element per new cover.
        const Diagram bottom = insert_fork(g, cells[0]);
        CHECK(bottom.size() == 9);
        CHECK(bottom.length() == 4);
        CHECK(slim_semimodular(bottom));
        // Top cell: the staircase also splits the edge below.
        const Diagram upper = insert_fork(g, cells[1]);
        CHECK(upper.size() == 10);
        CHECK(upper.length() == 4);
        CHECK(slim_semimodular(upper));
    }

    SUBCASE("S7 at (xl, a, m, top)") {
        const Diagram f = insert_fork(s7(), {xl, a, m, top});
        CHECK(f.length() == 4);
        CHECK(slim_semimodular(f));
        CHECK(validate(f.cover_data()).empty());
        const auto coatoms = f.lower_covers(f.top());
        CHECK(coatoms.size() == 4);
        const auto mi = meet_irreducibles(f);
        for (ElementId c : coatoms) CHECK(std::find(mi.begin(), mi.end(), c) != mi.end());
    }

    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(insert_fork(s7(), {0, a, b, top}), ArgumentError);
        CHECK_THROWS_AS(insert_fork(make_mn(3), {0, 1, 2, 4}), ArgumentError);
    }

    SUBCASE("every cell of random slim lattices") {
        Rng rng(11);
        for (int i = 0; i < 25; ++i) {
            const Diagram d = random_slim(5, 2, 1, rng).diagram;
            for (const auto& cell : enumerate_cells(d)) {
                const Diagram f = insert_fork(d, cell);
                CHECK(f.length() == d.length() + 1);
                CHECK(slim_semimodular(f));
            }
        }
    }
}

TEST_CASE("corners") {
    CHECK(corners(grid(2, 2)) == std::vector<ElementId>{1, 2});
    CHECK(corners(s7()).empty());
    CHECK(corners(chain(4)).empty());
    CHECK(corners(grid(3, 2)) == std::vector<ElementId>{2, 3});

    const Diagram c3 = remove_corner(grid(2, 2), 1);
    CHECK(canonically_equal(c3, chain(3)));
    for (ElementId x : corners(grid(3, 2))) {
        const Diagram r = remove_corner(grid(3, 2), x);
        CHECK(r.size() == 5);
        CHECK(validate(r.cover_data()).empty());
        CHECK(slim_semimodular(r));
    }
    CHECK_THROWS_AS(remove_corner(s7(), a), ArgumentError);
}

TEST_CASE("eye insertion") {
    const auto m3 = add_eye(grid(2, 2), {0, 1, 2, 3});
    CHECK(m3.eye == 4);
    CHECK(canonically_equal(m3.diagram, make_mn(3)));

    const auto m4 = add_eye(make_mn(3), {0, 1, 2, 4});
    CHECK(canonically_equal(m4.diagram, make_mn(4)));
    CHECK(m4.diagram.lower_covers(4)[1] == m4.eye);

    const auto eyed = add_eye(s7(), {xl, a, m, top});
    CHECK(eyes(eyed.diagram) == std::vector<ElementId>{eyed.eye});

    const auto laid = add_eye(layout(s7()), {xl, a, m, top});
    const auto& pts = laid.diagram.layout().value();
    CHECK(pts[laid.eye].x == doctest::Approx((pts[a].x + pts[m].x) / 2));
    CHECK(validate(laid.diagram.cover_data()).empty());

    CHECK_THROWS_AS(add_eye(s7(), {0, a, b, top}), ArgumentError);
}

TEST_CASE("distributivity and glued sums") {
    CHECK(is_distributive(grid(3, 3)));
    CHECK_FALSE(is_distributive(s7()));
    CHECK_FALSE(is_distributive(make_mn(3)));
    CHECK(is_glued_sum_decomposable(stacked_squares()));
    CHECK_FALSE(is_glued_sum_decomposable(s7()));
    CHECK(is_glued_sum_decomposable(chain(3)));
    CHECK(is_good(insert_fork(grid(3, 3), {0, 1, 2, 4})));
    CHECK_FALSE(is_good(s7()));  // only three cells
}

TEST_CASE("random generation") {
    SUBCASE("outputs are slim and semimodular") {
        Rng rng(5);
        for (int i = 0; i < 50; ++i) {
            const int length = 2 + static_cast<int>(rng.uniform(6));
            const int forks = static_cast<int>(rng.uniform(length - 1));
            const Generated g = random_slim(length, forks, static_cast<int>(rng.uniform(4)), rng);
            CHECK(g.diagram.length() == length);
            CHECK(slim_semimodular(g.diagram));
            CHECK(build_from_recipe(g.recipe) == g.diagram);
        }
    }

    SUBCASE("small cases") {
        Rng rng(1);
        const Diagram d = random_slim(2, 0, 0, rng).diagram;
        CHECK(d.length() == 2);
        CHECK(canonically_equal(d, grid(2, 2)));
    }

    SUBCASE("replay") {
        Rng r1(99), r2(99);
        CHECK(random_slim(6, 2, 2, r1).diagram == random_slim(6, 2, 2, r2).diagram);
        CHECK(random_good(6, r1).diagram == random_good(6, r2).diagram);
        CHECK(random_planar(5, 1, 0, 3, r1).recipe == random_planar(5, 1, 0, 3, r2).recipe);
    }

    SUBCASE("good boards") {
        Rng rng(8);
        for (int i = 0; i < 10; ++i) {
            const Diagram d = random_good(6, rng).diagram;
            CHECK(is_good(d));
            CHECK(d.length() == 6);
            CHECK(slim_semimodular(d));
        }
    }

    SUBCASE("length two has no good diagram") {
        // Grid lengths start at 2, so length 2 allows no forks: the square and its corner removals.
        for (int removals = 0; removals <= 2; ++removals) {
            Rng r(static_cast<std::uint64_t>(removals));
            const Diagram d = random_slim(2, 0, removals, r).diagram;
            CHECK((is_distributive(d) || is_glued_sum_decomposable(d)));
        }
        Rng rng(1);
        CHECK_THROWS_AS(random_good(2, rng), GenerationError);
        CHECK_THROWS_AS(random_good(1, rng), ArgumentError);
    }

    SUBCASE("planar outputs slim back to their base") {
        Rng rng(21);
        for (int i = 0; i < 20; ++i) {
            const Generated g = random_planar(5, 2, 1, 3, rng);
            CHECK(is_semimodular(g.diagram));
            CHECK(eyes(g.diagram).size() <= 3);
            CHECK(is_slim(full_slimming(g.diagram).diagram));
            CHECK(build_from_recipe(g.recipe) == g.diagram);
        }
    }
}
