#include <doctest.h>

#include "helpers.hpp"
#include "skewlab/diagram_ops.hpp"
#include "skewlab/error.hpp"
#include "skewlab/invariants.hpp"

using namespace skewlab;

namespace {

DiagramList connected_up_to(int n) {
    DiagramList out;
    for (int k = 1; k <= n; ++k) {
        const DiagramList part = enumerate_connected(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Composition> compositions_up_to(int n) {
    std::vector<Composition> out;
    for (int k = 1; k <= n; ++k) {
        const auto part = compositions_of(k);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace

TEST_SUITE("diagram_ops") {

TEST_CASE("joins of single rows") {
    const SkewShape two = compact("2");
    CHECK(concat(two, two) == ribbon_to_shape(Composition{2, 2}));
    CHECK(near_concat(two, two) == compact("4"));
    CHECK(disjoint_sum(two, two) == compact("4,2/2"));
    CHECK(components(disjoint_sum(two, compact("1,1"))).size() == 2);
    for (const Composition& a : compositions_up_to(3))
        for (const Composition& b : compositions_up_to(3)) {
            CHECK(concat(ribbon_to_shape(a), ribbon_to_shape(b)) == ribbon_to_shape(a.concat(b)));
            CHECK(near_concat(ribbon_to_shape(a), ribbon_to_shape(b)) == ribbon_to_shape(a.near_concat(b)));
        }
}

TEST_CASE("associativity of the joins") {
    const DiagramList small = connected_up_to(3);
    for (const SkewShape& a : small)
        for (const SkewShape& b : small)
            for (const SkewShape& c : small) {
                REQUIRE(concat(concat(a, b), c) == concat(a, concat(b, c)));
                REQUIRE(near_concat(near_concat(a, b), c) == near_concat(a, near_concat(b, c)));
                REQUIRE(near_concat(concat(a, b), c) == concat(a, near_concat(b, c)));
                REQUIRE(concat(near_concat(a, b), c) == near_concat(a, concat(b, c)));
            }
}

TEST_CASE("alpha o D for alpha = (2,3,1) and the 2x2 square") {
    const SkewShape expected = ascii(
        "........XX\n"
        "........XX\n"
        ".......XX\n"
        ".....XXXX\n"
        "...XXXX\n"
        "...XX\n"
        "..XX\n"
        "XXXX\n"
        "XX\n");
    CHECK(compose_alpha_D(Composition{2, 3, 1}, compact("2,2")) == expected);
}

TEST_CASE("D o beta for D = (3,3)/(1) and beta = (2,3)") {
    const SkewShape expected = ascii(
        "............XXX\n"
        "........XXXXX\n"
        ".......XXXXX\n"
        ".....XXXXX\n"
        ".XXXXX\n"
        "XX\n");
    CHECK(compose_D_beta(compact("3,3/1"), Composition{2, 3}) == expected);
}

TEST_CASE("compositions with ribbons stay ribbons") {
    for (const Composition& a : compositions_up_to(3))
        for (const Composition& b : compositions_up_to(3)) {
            CHECK(compose_alpha_D(a, ribbon_to_shape(b)).is_ribbon());
            CHECK(compose_alpha_D(a, ribbon_to_shape(b)) == compose_D_beta(ribbon_to_shape(a), b));
        }
    CHECK(compose_alpha_D(Composition{3}, compact("1")) == compact("3"));
    CHECK(compose_D_beta(compact("2,2"), Composition{1}) == compact("2,2"));
}

TEST_CASE("distributivity of o over the joins") {
    const std::vector<Composition> ribbons = compositions_up_to(3);
    const DiagramList ds = connected_up_to(4);
    for (const Composition& a : ribbons)
        for (const Composition& b : ribbons)
            for (const SkewShape& d : ds) {
                REQUIRE(compose_alpha_D(a.concat(b), d) == concat(compose_alpha_D(a, d), compose_alpha_D(b, d)));
                REQUIRE(compose_alpha_D(a.near_concat(b), d) ==
                        near_concat(compose_alpha_D(a, d), compose_alpha_D(b, d)));
            }
    const DiagramList small = connected_up_to(2);
    for (const SkewShape& d1 : small)
        for (const SkewShape& d2 : small)
            for (const Composition& b : ribbons) {
                REQUIRE(compose_D_beta(concat(d1, d2), b) == concat(compose_D_beta(d1, b), compose_D_beta(d2, b)));
                REQUIRE(compose_D_beta(near_concat(d1, d2), b) ==
                        near_concat(compose_D_beta(d1, b), compose_D_beta(d2, b)));
            }
}

TEST_CASE("rotating alpha o D") {
    for (const Composition& a : compositions_up_to(4))
        for (const SkewShape& d : connected_up_to(4))
            REQUIRE(rotate180(compose_alpha_D(a, d)) == compose_alpha_D(a.reversed(), rotate180(d)));
}

TEST_CASE("protrusion") {
    const SkewShape d = compact("4,3/1");
    CHECK(protrudes(d, Composition{1}, End::top));
    CHECK(protrudes(d, Composition{1}, End::bottom));
    CHECK_FALSE(protrudes(d, Composition{2}, End::top));
    CHECK(protrusion(d, End::top).front() == Composition{1});
    CHECK(diagonal_restriction(d, End::top, 1).size() == 1);
    CHECK(diagonal_restriction(d, End::bottom, 2).size() == 2);
    // the whole ribbon protrudes from itself at both ends
    const SkewShape r = ribbon_to_shape(Composition{2, 3});
    CHECK(protrudes(r, Composition{2, 3}, End::top));
}

TEST_CASE("amalgamation of (4,3)/(1) along a single cell") {
    const SkewShape d = compact("4,3/1");
    const Composition w{1};
    CHECK(amalgamate(d, d, w) == ascii("....XXX\n.XXXXX\nXXX\n"));
    Projection used = Projection::outer;
    CHECK(dot_omega(d, d, w, used) == ascii("...XXX\n..XXX\n.XXX\nXXX\n"));
    CHECK(used == Projection::inner);
    CHECK(amalgamate_power(d, w, 1) == d);
    CHECK(amalgamate_power(d, w, 3) == amalgamate(amalgamate(d, d, w), d, w));
    CHECK_THROWS_AS(amalgamate(d, d, Composition{2}), SkewError);
}

TEST_CASE("amalgamated composition alpha o_w D for alpha = (2,1,3)") {
    const SkewShape expected = ascii(
        "..............XXX\n"
        "...........XXXXX\n"
        "........XXXXX\n"
        ".......XXX\n"
        "......XXX\n"
        ".....XXX\n"
        "....XXX\n"
        ".XXXXX\n"
        "XXX\n");
    CHECK(amalgamated_compose(Composition{2, 1, 3}, compact("4,3/1"), Composition{1}) == expected);
    CHECK(check_hypotheses(compact("4,3/1"), Composition{1}).ok());
}

TEST_CASE("separation failure for a column of two cells") {
    const SkewShape d = compact("1,1");
    const HypothesisReport h = check_hypotheses(d, Composition{1});
    CHECK(h.connected);
    CHECK(h.protrudes_top);
    CHECK(h.protrudes_bottom);
    CHECK(h.dot_defined);
    CHECK_FALSE(h.separated);
    CHECK_FALSE(h.ok());
    CHECK_FALSE(h.diagnostic().empty());
    CHECK(dot_omega(d, d, Composition{1}) == compact("2,2"));
    CHECK(amalgamated_compose(Composition{1, 1, 1}, d, Composition{1}) == compact("3,3"));
}

TEST_CASE("dot_omega of two rows") {
    Projection used = Projection::outer;
    CHECK(dot_omega(compact("2"), compact("2"), Composition{1}, used) == compact("2,2"));
    CHECK(used == Projection::inner);
}

TEST_CASE("rotating amalgamations") {
    const SkewShape d = compact("4,3/1");
    for (int r = 1; r <= 4; ++r)
        CHECK(amalgamate_power(rotate180(d), Composition{1}, r) == rotate180(amalgamate_power(d, Composition{1}, r)));
    const SkewShape e = ribbon_to_shape(Composition{2, 1, 2});
    for (const Composition& w : protrusion(e, End::top)) {
        if (!protrudes(e, w, End::bottom) || w == Composition{2, 1, 2}) continue;
        for (int r = 1; r <= 3; ++r)
            CHECK(amalgamate_power(rotate180(e), w.reversed(), r) == rotate180(amalgamate_power(e, w, r)));
    }
}

TEST_CASE("hat of the five-row example") {
    const SkewShape d = compact("4,4,3,3,2/3,3,1");
    const HatDiagram h = hat(d);
    CHECK(h.shape == ascii("...X\n.XX.\nXX..\n"));
    REQUIRE(h.rows.size() == 4);
    CHECK(h.rows[1].empty());
    using V = std::vector<std::vector<int>>;
    CHECK(row_overlaps(d.rows()) == V{{1, 1, 2, 3, 2}, {1, 0, 2, 2}, {0, 0, 1}, {0, 0}, {0}});
    CHECK(row_overlaps(h.rows) == V{{1, 0, 2, 2}, {0, 0, 1}, {0, 0}, {0}});
    CHECK(hat(compact("5")).shape.empty());
}

TEST_CASE("hat shifts the row overlaps") {
    for (const SkewShape& d : connected_up_to(8)) {
        const auto full = row_overlaps(d.rows());
        const auto shifted = row_overlaps(hat(d).rows);
        REQUIRE(shifted.size() + 1 == full.size());
        for (std::size_t k = 0; k < shifted.size(); ++k) REQUIRE(shifted[k] == full[k + 1]);
    }
}

}  // TEST_SUITE
