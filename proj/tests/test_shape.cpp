#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "skewlab/error.hpp"

using namespace skewlab;

TEST_SUITE("shape") {

TEST_CASE("partitions and compositions") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{3, 0, 0} == Partition{3});
    CHECK_THROWS_AS(Partition({1, 2}), SkewError);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(5).front() == Partition{5});
    CHECK(compositions_of(4).size() == 8);
    CHECK(centralizer_order(Partition{2, 1, 1}) == 4);
    const Composition a{2, 3, 1};
    CHECK(a.reversed() == Composition{1, 3, 2});
    CHECK(a.sorted() == Partition{3, 2, 1});
    CHECK(Composition::from_partial_sums(6, a.partial_sums()) == a);
    CHECK(a.concat(Composition{4}) == Composition{2, 3, 1, 4});
    CHECK(a.near_concat(Composition{4}) == Composition{2, 3, 5});
}

TEST_CASE("canonical form drops empty rows and columns") {
    const SkewShape d = SkewShape::from_partitions(Partition{5, 5, 2}, Partition{5, 1});
    CHECK(d.num_rows() == 2);
    CHECK(d.outer() == Partition{5, 2});
    CHECK(d.inner() == Partition{1});
    CHECK(SkewShape::from_partitions(Partition{3, 3, 1}, Partition{3}) == compact("3,1"));
    CHECK(compact("4,4,3,3,2/3,3,1").size() == 9);
    CHECK(compact("3").compact() == "3");
    CHECK(compact("(5,4)/(1)").compact() == "5,4/1");
    CHECK(compact("1/").size() == 1);
    CHECK_THROWS_AS(compact("3,1/2,2"), SkewError);
    CHECK_THROWS_AS(compact("3,a"), SkewError);
}

TEST_CASE("ascii round trip") {
    const SkewShape d = compact("4,4,3,3,2/3,3,1");
    CHECK(d.ascii() == "...X\n...X\n.XX.\nXXX.\nXX..\n");
    CHECK(ascii(d.ascii()) == d);
    CHECK(ascii(ascii(d.ascii()).ascii()).ascii() == d.ascii());
    CHECK(ascii("\n..##\n###\n") == compact("4,3/2"));
    CHECK_THROWS_AS(ascii("X?"), SkewError);
    CHECK_THROWS_AS(ascii("X.X"), SkewError);
}

TEST_CASE("connectivity and ribbons") {
    const SkewShape lr = compact("4,4,3,3,2/3,3,1");
    CHECK_FALSE(lr.is_connected());
    const DiagramList parts = components(lr);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == compact("3,3,2/1"));
    CHECK(parts[1] == compact("1,1"));
    CHECK(components(compact("3,2")).size() == 1);
    CHECK(compact("3,2/1").is_ribbon());
    CHECK_FALSE(compact("2,2").is_ribbon());
    CHECK(shape_to_ribbon(compact("4,2/1")) == Composition{2, 3});
    CHECK(ribbon_to_shape(Composition{2, 3}) == compact("4,2/1"));
    CHECK_THROWS_AS(shape_to_ribbon(compact("2,2")), SkewError);
    CHECK_THROWS_AS(shape_to_ribbon(lr), SkewError);
}

TEST_CASE("transpose and rotation") {
    const SkewShape d = compact("5,4,3,1/3,2");
    CHECK(transpose(transpose(d)) == d);
    CHECK(rotate180(rotate180(d)) == d);
    CHECK(transpose(compact("3,1")) == compact("2,1,1"));
    CHECK(rotate180(compact("2,1")) == compact("2,2/1"));
    CHECK(ribbon_to_shape(Composition{1, 2, 3}) == rotate180(ribbon_to_shape(Composition{3, 2, 1})));
}

TEST_CASE("enumeration of connected diagrams") {
    CHECK(enumerate_connected(1) == DiagramList{compact("1")});
    const DiagramList two = enumerate_connected(2);
    CHECK(std::set<SkewShape>(two.begin(), two.end()) == std::set<SkewShape>{compact("2"), compact("1,1")});

    // Counts produced by the independent generator in oracles.cpp, frozen.
    const int golden[] = {1, 2, 4, 9, 20, 46, 105, 242, 557, 1285};
    for (int n = 1; n <= 10; ++n) {
        const DiagramList all = enumerate_connected(n);
        CHECK(static_cast<int>(all.size()) == golden[n - 1]);
        const std::set<SkewShape> unique(all.begin(), all.end());
        CHECK(unique.size() == all.size());
        for (const SkewShape& d : all) {
            REQUIRE(d.size() == n);
            REQUIRE(components(d).size() == 1);
        }
    }
    for (int n = 1; n <= 8; ++n) {
        const DiagramList all = enumerate_connected(n);
        const std::vector<SkewShape> brute = oracle::connected_diagrams(n);
        CHECK(std::set<SkewShape>(all.begin(), all.end()) == std::set<SkewShape>(brute.begin(), brute.end()));
    }
}

}  // TEST_SUITE
