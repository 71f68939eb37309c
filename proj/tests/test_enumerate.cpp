#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "treedeck/canon.hpp"
#include "treedeck/enumerate.hpp"

using namespace treedeck;

TEST_CASE("class counts for small orders") {
    const long long expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(count_free_trees(n) == expected[n - 1]);
}

TEST_CASE("counts match the divisor-sum recurrence through order 13") {
    auto r = oracles::rooted_tree_counts(13);
    for (int n = 1; n <= 13; ++n)
        CHECK(count_free_trees(n) == oracles::free_tree_count_formula(n, r));
}

TEST_CASE("counts match the exhaustive labelled-tree oracle") {
    for (int n = 2; n <= 8; ++n) CHECK(count_free_trees(n) == prufer_oracle_count(n));
}

TEST_CASE("no code appears twice through order 12") {
    for (int n = 1; n <= 12; ++n) {
        std::set<CanonCode> codes;
        TreeStream s(n);
        Tree t;
        while (s.next(t)) CHECK(codes.insert(free_code(t)).second);
        CHECK(static_cast<long long>(codes.size()) == count_free_trees(n));
    }
}

TEST_CASE("stream replays the identical sequence") {
    TreeStream a(9), b(9);
    Tree ta, tb;
    while (a.next(ta)) {
        REQUIRE(b.next(tb));
        CHECK(ta == tb);
    }
    CHECK_FALSE(b.next(tb));
    // and a fresh stream after exhaustion stays exhausted
    CHECK_FALSE(a.next(ta));
}

TEST_CASE("first trees come out in the fixed generator order") {
    std::vector<Tree> four = enumerate_free_trees(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].edges() == EdgeList{{0, 1}, {0, 3}, {1, 2}});  // the path
    CHECK(four[1].edges() == EdgeList{{0, 1}, {0, 2}, {0, 3}});  // the star
    std::vector<Tree> three = enumerate_free_trees(3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].edges() == EdgeList{{0, 1}, {0, 2}});
}

TEST_CASE("every streamed tree is centered at vertex 0") {
    for (int n = 2; n <= 10; ++n)
        for (const Tree& t : enumerate_free_trees(n)) {
            VertexSet cs = centers(t);
            CHECK(cs.front() == 0);
        }
}

TEST_CASE("order bounds") {
    CHECK_THROWS_AS(TreeStream(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_free_trees(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_free_trees(21), std::out_of_range);   // default cap
    CHECK_THROWS_AS(enumerate_free_trees(6, 5), std::out_of_range); // explicit cap
    CHECK_NOTHROW(enumerate_free_trees(5, 5));
    CHECK_THROWS_AS(prufer_oracle_count(1), std::out_of_range);
    CHECK_THROWS_AS(prufer_oracle_count(11), std::out_of_range);
}
