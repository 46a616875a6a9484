#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chibound/bounds.hpp"
#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "chibound/patterns.hpp"
#include "test_util.hpp"

using namespace chibound;

namespace {
void checkCover(const Graph& g, const CliqueCover& cover) {
    VertexSet covered;
    for (const VertexSet& part : cover.parts) {
        CHECK_FALSE(part.empty());
        CHECK((covered & part).empty());
        covered |= part;
        for (int u : part)
            for (int v : part)
                if (v > u) CHECK(g.adjacent(u, v));
    }
    CHECK(covered == VertexSet::range(g.n()));
}
} // namespace

TEST_CASE("clique cover examples") {
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CliqueCover c = cliqueCover(k5);
    CHECK(c.parts.size() == 1);
    checkCover(k5, c);

    // C5 is self-complementary; the cover mirrors a 3-coloring of C5
    Graph c5 = named("c5");
    REQUIRE(isBoundsClassMember(c5).member);
    CliqueCover cc = cliqueCover(c5);
    CHECK(cc.parts.size() == 3);
    checkCover(c5, cc);

    // complement of 2K2 is C4, which is 2-colorable
    Graph twoK2(4, {{0, 1}, {2, 3}});
    REQUIRE(isBoundsClassMember(twoK2).member);
    CliqueCover c2 = cliqueCover(twoK2);
    CHECK(c2.parts.size() == 2);
    checkCover(twoK2, c2);

    CHECK_THROWS_AS(cliqueCover(named("4k1")), Error);
}

TEST_CASE("order and chromatic bounds") {
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    BoundReport r1 = verifyOrderBound(k5);
    CHECK(r1.pass);
    CHECK(r1.value == 5);
    CHECK(r1.bound == 35);
    BoundReport r2 = verifyChiBound(k5);
    CHECK(r2.pass);
    CHECK(r2.value == 5);
    CHECK(r2.bound == 20);

    Graph c5 = named("c5");
    BoundReport r3 = verifyOrderBound(c5);
    CHECK(r3.pass);
    CHECK(r3.value == 5);
    CHECK(r3.bound == 14);
    BoundReport r4 = verifyChiBound(c5);
    CHECK(r4.pass);
    CHECK(r4.value == 3);
    CHECK(r4.bound == 8);

    CHECK_THROWS_AS(verifyOrderBound(named("cop3up2")), Error);
}

TEST_CASE("the complement bridge between the two classes") {
    for (std::uint64_t s = 0; s < 120; ++s) {
        Graph g = testutil::randomGraph(8, 0.3 + 0.05 * double(s % 9), 7200 + s);
        CHECK(isBoundsClassMember(g).member == isClassMember(complement(g)).member);
    }
}

TEST_CASE("covers of fuzzed bounds members validate and stay within 7 per factor") {
    int tested = 0;
    for (std::uint64_t s = 0; s < 120 && tested < 60; ++s) {
        GenConfig cfg{11, 0.35, 5100 + s, 0};
        Graph member = randomClassMember(cfg);
        Graph g = complement(member);
        if (!isBoundsClassMember(g).member) continue; // certify, never assume
        ++tested;
        CliqueCover cover = cliqueCover(g);
        checkCover(g, cover);
        CHECK(int(cover.parts.size()) <= 7);
        CHECK(verifyOrderBound(g).pass);
        CHECK(verifyChiBound(g).pass);
    }
    CHECK(tested >= 50);
}
