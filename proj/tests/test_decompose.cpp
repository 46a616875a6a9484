#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chibound/decompose.hpp"
#include "chibound/generators.hpp"
#include "chibound/oracle.hpp"
#include "chibound/patterns.hpp"
#include "test_util.hpp"

using namespace chibound;

TEST_CASE("decomposition of the codomino around its v-triangle") {
    // role order v1 v2 v3 u1 u2 u3 -> indices 0..5
    Graph g = named("codomino");
    TriangleDecomposition d = aroundTriangle(g, {0, 1, 2});
    CHECK(d.a0 == VertexSet::of({4}));
    CHECK(d.a1 == VertexSet::of({3, 5}));
    CHECK(d.a2.empty());
    CHECK(d.b[0] == VertexSet::of({3, 4})); // u1 sees v1 only, u2 sees nothing
    CHECK(d.b[1].empty());
    CHECK(d.b[2] == VertexSet::of({5}));
    CHECK(verifyBiP3Free(g, d).pass);
}

TEST_CASE("decomposition corner cases") {
    Graph k3 = named("k3");
    TriangleDecomposition d = aroundTriangle(k3, {0, 1, 2});
    CHECK(d.a0.empty());
    CHECK(d.a1.empty());
    CHECK(d.a2.empty());
    CHECK(verifyBiP3Free(k3, d).pass);

    CHECK_THROWS_AS(aroundTriangle(named("c5"), {0, 1, 2}), Error);

    // v3, v4, v6 of the co-twin-C5 do induce a triangle
    Graph ctc = named("cotwinc5");
    CHECK_NOTHROW(aroundTriangle(ctc, {2, 3, 5}));

    // a dominating vertex trips the K4 assertion
    Graph k4 = named("k4");
    CHECK_THROWS_AS(aroundTriangle(k4, {0, 1, 2}), Error);
    CHECK(aroundTriangle(k4, {0, 1, 2}, false).a3 == VertexSet::of({3}));
}

TEST_CASE("decomposition partitions V, splits partition A2") {
    long triangles = 0;
    GraphEnumerator en(6);
    while (auto g = en.next()) {
        if (!isClassMember(*g).member) continue;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) {
                    if (!(g->adjacent(a, b) && g->adjacent(b, c) && g->adjacent(a, c)))
                        continue;
                    ++triangles;
                    TriangleDecomposition d = aroundTriangle(*g, {a, b, c});
                    VertexSet all = d.a0 | d.a1 | d.a2 | VertexSet::of({a, b, c});
                    CHECK(all == VertexSet::range(6));
                    CHECK((d.a0 & d.a1).empty());
                    CHECK((d.a0 & d.a2).empty());
                    CHECK((d.a1 & d.a2).empty());
                    CHECK((d.b[0] | d.b[1] | d.b[2]) == (d.a0 | d.a1));
                    CHECK((d.b[0] & d.b[1]).empty());
                    CHECK((d.b[1] & d.b[2]).empty());
                    CHECK((d.a2Split[0] | d.a2Split[1] | d.a2Split[2]) == d.a2);
                    for (int i = 0; i < 3; ++i) {
                        VertexSet s = d.a2Split[std::size_t(i)];
                        s.add(d.partner(i));
                        CHECK(isStableSet(*g, s));
                    }
                    // K3+P2-free hosts keep every B block a union of edges
                    if (!containsInduced(*g, patternByName("k3up2"))) {
                        for (int i = 0; i < 3; ++i)
                            CHECK(cliqueNumber(induced(*g, d.b[std::size_t(i)])).value <= 2);
                    }
                }
    }
    CHECK(triangles > 100); // the sweep actually exercised the checks
}

TEST_CASE("d1/d2 split") {
    D1D2Partition c5 = d1d2(named("c5"));
    CHECK(c5.d1 == VertexSet::range(5));
    CHECK(c5.d2.empty());

    D1D2Partition k4 = d1d2(named("k4"));
    CHECK(k4.d1 == VertexSet::range(4));

    Graph twoTriangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    D1D2Partition kk = d1d2(twoTriangles);
    CHECK(kk.d2 == VertexSet::range(6));
    CHECK(kk.d1.empty());
}

TEST_CASE("open and closed neighborhood forms of d1 agree at threshold two") {
    // the vertex itself is isolated among its non-neighbors, so it never
    // joins a clique of size two there
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = testutil::randomGraph(9, 0.4 + 0.02 * double(s % 10), 600 + s);
        D1D2Partition open = d1d2(g, false);
        D1D2Partition closed = d1d2(g, true);
        CHECK(open.d1 == closed.d1);
    }
}

TEST_CASE("five-set split on C5") {
    Graph c5 = named("c5");
    FiveSetSplit f = fiveSetSplit(c5, 0, 1, 3);
    // N(0)={1,4}, N(1)={0,2}, N(3)={2,4}; v1, v2 excluded throughout
    CHECK(f.sets[4].empty());                    // N(v1) cap N(v2)
    CHECK(f.sets[0].empty());                    // N(v1) - N(v3)
    CHECK(f.sets[1] == VertexSet::of({4}));      // N(v1) cap N(v3), off N(v2)
    CHECK(f.sets[2].empty());                    // N(v2) - N(v3)
    CHECK(f.sets[3] == VertexSet::of({2}));      // N(v2) cap N(v3), off N(v1)
    VertexSet all;
    for (const auto& s : f.sets) all |= s;
    CHECK(all == VertexSet::of({2, 4}));
}

TEST_CASE("five-set split preconditions") {
    Graph p2up1(3, {{0, 1}});
    FiveSetSplit f = fiveSetSplit(p2up1, 0, 1, 2);
    for (const auto& s : f.sets) CHECK(s.empty());

    CHECK_THROWS_AS(fiveSetSplit(named("c5"), 0, 2, 4), Error); // v1 !~ v2
    CHECK_THROWS_AS(fiveSetSplit(named("c5"), 0, 1, 4), Error); // v3 ~ v1
    // d2 vertices are rejected: both triangles of the bowtie-free pair graph
    Graph twoTriangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(fiveSetSplit(twoTriangles, 0, 1, 3), Error);
}

TEST_CASE("five-set split sets are disjoint and stable on class members") {
    GraphEnumerator en(6);
    long exercised = 0;
    while (auto g = en.next()) {
        if (!isClassMember(*g).member) continue;
        D1D2Partition dd = d1d2(*g);
        // find a valid (v1, v2, v3) configuration inside d1
        for (int v1 : dd.d1)
            for (int v2 : dd.d1) {
                if (v2 <= v1 || !g->adjacent(v1, v2)) continue;
                for (int v3 : dd.d1) {
                    if (v3 == v1 || v3 == v2) continue;
                    if (g->adjacent(v3, v1) || g->adjacent(v3, v2)) continue;
                    FiveSetSplit f = fiveSetSplit(*g, v1, v2, v3);
                    VertexSet seen;
                    VertexSet expect = (neighbors(*g, v1) | neighbors(*g, v2)) -
                                       VertexSet::of({v1, v2});
                    for (const auto& s : f.sets) {
                        CHECK((seen & s).empty());
                        seen |= s;
                    }
                    CHECK(seen == expect);
                    ++exercised;
                }
            }
    }
    CHECK(exercised > 100);
}

TEST_CASE("verifyBiP3Free reports a witness when fed a foreign decomposition") {
    // host with a P3 inside what becomes B1: triangle 0,1,2 plus a path
    // 3-4-5 attached to vertex 0
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {3, 4}, {4, 5}});
    TriangleDecomposition d = aroundTriangle(g, {0, 1, 2});
    BiP3Report r = verifyBiP3Free(g, d);
    CHECK_FALSE(r.pass);
    CHECK(r.biIndex == 0);
    // the witness really is an induced P3 inside that block
    auto [a, m, c] = r.witness;
    CHECK(g.adjacent(a, m));
    CHECK(g.adjacent(m, c));
    CHECK_FALSE(g.adjacent(a, c));
}
