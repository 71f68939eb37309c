#include <stdexcept>

#include "doctest.h"
#include "treedeck/enumerate.hpp"
#include "treedeck/reconstruct.hpp"
#include "treedeck/structure.hpp"

using namespace treedeck;

namespace {

Tree path(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree(n, e);
}

Tree star(int n) {
    EdgeList e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Tree(n, e);
}

BrushCardPair cards_for(const Tree& t, int u, int v) {
    return {delete_vertex(t, u), delete_vertex(t, v)};
}

}  // namespace

TEST_CASE("the worked pair: a path of 3 plus an isolated-vertex card give the path of 4") {
    BrushCardPair p{Forest(3, {{0, 1}, {1, 2}}), Forest(3, {{1, 2}})};
    Tree got = reconstruct_from_brush_cards(p);
    CHECK(free_code(got) == "(()(()))");
    CHECK(free_code(reconstruct_from_brush_cards(p, true)) == "(()(()))");
}

TEST_CASE("shape violations raise the no-candidate error") {
    // all-isolated second card: no component beyond the brush
    CHECK_THROWS_AS(
        reconstruct_from_brush_cards({Forest(4, {{0, 1}, {0, 2}, {0, 3}}), Forest(4, {})}),
        NoCandidateError);
    // disconnected first card
    CHECK_THROWS_AS(reconstruct_from_brush_cards({Forest(3, {{1, 2}}), Forest(3, {{1, 2}})}),
                    NoCandidateError);
    // mismatched orders
    CHECK_THROWS_AS(
        reconstruct_from_brush_cards({Forest(3, {{0, 1}, {1, 2}}), Forest(4, {{2, 3}})}),
        NoCandidateError);
    // second card with two large components
    CHECK_THROWS_AS(reconstruct_from_brush_cards({Forest(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                                                  Forest(5, {{0, 1}, {2, 3}})}),
                    NoCandidateError);
    // second card with no isolated vertex at all
    CHECK_THROWS_AS(reconstruct_from_brush_cards({Forest(3, {{0, 1}, {1, 2}}),
                                                  Forest(3, {{0, 1}, {1, 2}})}),
                    NoCandidateError);
}

TEST_CASE("a well-shaped pair that fits no tree is rejected") {
    // first card a star on 4; the only brush-compatible attachment leaves
    // one isolated vertex behind, never the two the second card demands
    BrushCardPair p{Forest(4, {{0, 1}, {0, 2}, {0, 3}}), Forest(4, {{2, 3}})};
    CHECK_THROWS_AS(reconstruct_from_brush_cards(p), NoCandidateError);
    CHECK_THROWS_AS(reconstruct_from_brush_cards(p, true), NoCandidateError);
}

TEST_CASE("a realizable pair with a star first card finds the broom") {
    // attaching at a star leaf is the one fit: the new vertex joins a brush
    // rooted there and the root's deletion leaves an isolated vertex plus
    // a path of 3
    BrushCardPair p{Forest(4, {{0, 1}, {0, 2}, {0, 3}}), Forest(4, {{1, 2}, {2, 3}})};
    Tree got = reconstruct_from_brush_cards(p, true);
    CHECK(got.n() == 5);
    CHECK(free_code(got) == free_code(Tree(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}})));
}

TEST_CASE("round trip over every brush pair through order 9") {
    for (int n = 4; n <= 9; ++n)
        for (const Tree& t : enumerate_free_trees(n))
            for (auto [u, v] : brush_pairs(t)) {
                Tree back = reconstruct_from_brush_cards(cards_for(t, u, v), true);
                CHECK(isomorphic(back, t));
            }
}

TEST_CASE("checked and unchecked agree") {
    Tree t = path(7);
    for (auto [u, v] : brush_pairs(t)) {
        BrushCardPair p = cards_for(t, u, v);
        CHECK(isomorphic(reconstruct_from_brush_cards(p, false),
                         reconstruct_from_brush_cards(p, true)));
    }
}

TEST_CASE("crn of starlike trees is 1") {
    CardIndex ix4 = build_card_index(4);
    CrnResult star4 = crn(star(4), ix4);
    CHECK(star4.value == 1);
    CHECK(star4.witness == std::vector<CanonCode>{"();();()"});
    CrnResult p4 = crn(path(4), ix4);
    CHECK(p4.value == 1);
    CHECK(p4.witness == std::vector<CanonCode>{"();(())"});

    CardIndex ix7 = build_card_index(7);
    Tree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(crn(spider, ix7).value == 1);
}

TEST_CASE("crn of the path on 6 vertices is 2") {
    CardIndex ix = build_card_index(6);
    CrnResult r = crn(path(6), ix);
    CHECK(r.value == 2);
    CHECK_FALSE(r.exceeds_three);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness[0] == r.witness[1]);  // two copies of the mid-deletion card
    CHECK(r.witness[0] == "(());(()())");
}

TEST_CASE("crn witnesses are minimal and exclusive to their tree") {
    for (int n : {6, 7}) {
        CardIndex ix = build_card_index(n);
        for (const Tree& t : enumerate_free_trees(n)) {
            CrnResult r = crn(t, ix);
            REQUIRE_FALSE(r.exceeds_three);
            CHECK(static_cast<int>(r.witness.size()) == r.value);
            CodeMultiset sub;
            for (const CanonCode& c : r.witness) ++sub[c];
            CanonCode mine = free_code(t);
            CHECK(subdeck_contained(sub, ix.decks.at(mine)));
            for (const auto& [other, deck] : ix.decks)
                if (other != mine) CHECK_FALSE(subdeck_contained(sub, deck));
        }
    }
}

TEST_CASE("crn argument validation") {
    CardIndex ix = build_card_index(5);
    CHECK_THROWS_AS(crn(path(4), ix), std::invalid_argument);   // order mismatch
    CHECK_THROWS_AS(crn(path(2), build_card_index(2)), std::invalid_argument);
}
