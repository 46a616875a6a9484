#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "test_util.hpp"

using namespace chibound;

namespace {
bool isClique(const Graph& g, VertexSet s) {
    for (int u : s)
        for (int v : s)
            if (v > u && !g.adjacent(u, v)) return false;
    return true;
}
} // namespace

TEST_CASE("clique number examples") {
    CHECK(cliqueNumber(named("k4")).value == 4);
    CHECK(cliqueNumber(named("c5")).value == 2);
    CliqueResult cd = cliqueNumber(named("codomino"));
    CHECK(cd.value == 3);
    CHECK(cd.witness.size() == 3);
    CHECK(isClique(named("codomino"), cd.witness));
    CHECK(cliqueNumber(Graph(0)).value == 0);
    CHECK(cliqueNumber(Graph(3)).value == 1);
}

TEST_CASE("k-colorability examples") {
    CHECK_FALSE(kColorable(named("c5"), 2).has_value());
    auto c = kColorable(named("c5"), 3);
    REQUIRE(c.has_value());
    CHECK(validate(named("c5"), *c));
    CHECK(c->k <= 3);
    CHECK_FALSE(kColorable(named("k4"), 3).has_value());
    CHECK_THROWS_AS(kColorable(named("c5"), 0), Error);
}

TEST_CASE("exact chromatic number examples") {
    CHECK(exactChromatic(Graph(5)).value == 1);
    CHECK(exactChromatic(named("c6")).value == 2);
    ChromaticResult coa = exactChromatic(named("coa"));
    CHECK(coa.value == 3);
    CHECK(validate(named("coa"), coa.certificate));
    CHECK(coa.certificate.k == 3);
    CHECK(exactChromatic(Graph(0)).value == 0);
}

TEST_CASE("oracle invariants on random graphs") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = testutil::randomGraph(8, 0.2 + 0.07 * double(s % 9), 300 + s);
        ChromaticResult chi = exactChromatic(g);
        CliqueResult omega = cliqueNumber(g);
        CHECK(chi.value >= omega.value);
        CHECK(isClique(g, omega.witness));
        CHECK(omega.witness.size() == omega.value);
        CHECK(validate(g, chi.certificate));
        CHECK(kColorable(g, chi.value).has_value());
        if (chi.value > 1) CHECK_FALSE(kColorable(g, chi.value - 1).has_value());
    }
}

TEST_CASE("chromatic number is invariant under relabeling") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = testutil::randomGraph(6, 0.5, 800 + s);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        Rng rng(s);
        for (int i = 5; i > 0; --i)
            std::swap(perm[std::size_t(i)], perm[rng.below(std::uint64_t(i) + 1)]);
        CHECK(exactChromatic(g).value ==
              exactChromatic(testutil::relabel(g, perm)).value);
    }
}

TEST_CASE("brute containment examples and limits") {
    Graph c6 = named("c6");
    CHECK_FALSE(bruteContains(c6, patternByName("p3up2")));
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(bruteContains(k5, patternByName("k4")));
    CHECK(bruteContains(named("p5"), patternByName("2k2")));
    CHECK_THROWS_AS(bruteContains(Graph(13), patternByName("p2")), Error);
}

TEST_CASE("coloring validation") {
    Graph k3 = named("k3");
    CHECK(validate(k3, Coloring{{1, 2, 3}, 3}));
    CHECK_FALSE(validate(k3, Coloring{{1, 1, 2}, 2}));
    CHECK(validate(named("c5"), Coloring{{1, 2, 1, 2, 3}, 3}));
    CHECK_THROWS_AS(validate(k3, Coloring{{1, 2}, 2}), Error);
    CHECK_THROWS_AS(validate(k3, Coloring{{1, 0, 2}, 2}), Error);
}
