#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "chibound/generators.hpp"
#include "chibound/graph.hpp"
#include "test_util.hpp"

using namespace chibound;

namespace {
Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}
Graph completeGraph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}
Graph pathGraph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}
} // namespace

TEST_CASE("complement basics") {
    CHECK(complement(completeGraph(3)) == Graph(3));
    CHECK(complement(complement(cycle(5))) == cycle(5));
    // co-P4 is again a P4 up to relabeling
    CHECK(testutil::isomorphic(complement(pathGraph(4)), pathGraph(4)));
}

TEST_CASE("complement is an involution") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = testutil::randomGraph(9, 0.4, s);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
    CHECK(induced(cycle(6), VertexSet::of({0, 1, 2, 3, 4})) == pathGraph(5));
    Graph g = testutil::randomGraph(7, 0.5, 11);
    CHECK(induced(g, VertexSet::range(7)) == g);
    CHECK(induced(completeGraph(4), VertexSet::of({0, 1})) == completeGraph(2));
    CHECK_THROWS_AS(induced(pathGraph(3), VertexSet::of({0, 5})), Error);
}

TEST_CASE("induced keeps sizes and edge counts") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = testutil::randomGraph(10, 0.5, 100 + s);
        VertexSet sub;
        Rng rng(s);
        for (int v = 0; v < 10; ++v)
            if (rng.real() < 0.6) sub.add(v);
        Graph h = induced(g, sub);
        CHECK(h.n() == sub.size());
        int inside = 0;
        auto verts = sub.toVector();
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (g.adjacent(verts[i], verts[j])) ++inside;
        CHECK(h.edgeCount() == inside);
    }
}

TEST_CASE("neighborhood sets") {
    CHECK(neighbors(cycle(5), 0) == VertexSet::of({1, 4}));
    CHECK(nonNeighbors(completeGraph(4), 0).empty());
    CHECK(jointComplementSet(cycle(6), 0, 1) == VertexSet::of({3, 4}));
}

TEST_CASE("vertex, neighbors, non-neighbors partition V") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = testutil::randomGraph(11, 0.45, 500 + s);
        for (int v = 0; v < g.n(); ++v) {
            VertexSet nb = neighbors(g, v);
            VertexSet far = nonNeighbors(g, v);
            CHECK((nb & far).empty());
            CHECK_FALSE(nb.contains(v));
            VertexSet all = nb | far;
            all.add(v);
            CHECK(all == VertexSet::range(g.n()));
        }
    }
}

TEST_CASE("complete and anticomplete") {
    CHECK(completeTo(completeGraph(4), VertexSet::of({0}), VertexSet::of({1, 2, 3})));
    Graph twoK2(4, {{0, 1}, {2, 3}});
    CHECK(anticompleteTo(twoK2, VertexSet::of({0, 1}), VertexSet::of({2, 3})));
    CHECK_FALSE(completeTo(cycle(5), VertexSet::of({0}), VertexSet::of({1, 2})));
    CHECK_THROWS_AS(completeTo(cycle(5), VertexSet::of({0, 1}), VertexSet::of({1, 2})), Error);
}

TEST_CASE("stable-set and component helpers") {
    Graph g(6, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(isStableSet(g, VertexSet::of({0, 2, 4})));
    CHECK_FALSE(isStableSet(g, VertexSet::of({2, 3})));
    CHECK(componentsAtMostTwo(g, VertexSet::of({0, 1, 2, 5})));
    CHECK_FALSE(componentsAtMostTwo(g, VertexSet::of({2, 3, 4})));
    auto halves = twoColorCliquePairs(g, VertexSet::of({0, 1, 2, 5}));
    REQUIRE(halves.has_value());
    CHECK(isStableSet(g, halves->first));
    CHECK(isStableSet(g, halves->second));
    CHECK((halves->first | halves->second) == VertexSet::of({0, 1, 2, 5}));
    auto edge = firstEdgeInside(g, VertexSet::of({1, 3, 4}));
    REQUIRE(edge.has_value());
    CHECK(edge->first == 3);
    CHECK(edge->second == 4);
    auto tri = firstTriangleInside(completeGraph(5), VertexSet::of({1, 2, 4}));
    REQUIRE(tri.has_value());
    CHECK((*tri)[0] == 1);
}

TEST_CASE("canonical key identifies isomorphs") {
    Graph p3a(3, {{0, 1}, {1, 2}});
    Graph p3b(3, {{1, 0}, {0, 2}}); // same path, center relabeled
    CHECK(canonicalKey(p3a) == canonicalKey(p3b));
    CHECK(canonicalKey(completeGraph(3)) != canonicalKey(p3a));
    CHECK_THROWS_AS(canonicalKey(Graph(11)), Error);
}

TEST_CASE("canonical key counts the 11 graphs on four vertices") {
    std::set<std::string> keys;
    GraphEnumerator en(4);
    while (auto g = en.next()) keys.insert(canonicalKey(*g));
    CHECK(keys.size() == 11);
}

TEST_CASE("canonical key agrees with brute-force isomorphism") {
    // exhaustive on 4 vertices, sampled pairs on 5 and 6
    std::vector<Graph> all4;
    GraphEnumerator en(4);
    while (auto g = en.next()) all4.push_back(*g);
    for (const Graph& a : all4)
        for (const Graph& b : all4)
            CHECK((canonicalKey(a) == canonicalKey(b)) == testutil::isomorphic(a, b));

    for (int n : {5, 6}) {
        for (std::uint64_t s = 0; s < 120; ++s) {
            Graph a = testutil::randomGraph(n, 0.5, 900 + s);
            Graph b = testutil::randomGraph(n, 0.5, 2900 + s);
            CHECK((canonicalKey(a) == canonicalKey(b)) == testutil::isomorphic(a, b));
            // a relabeling always matches
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            Rng rng(s);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[std::size_t(i)], perm[rng.below(std::uint64_t(i) + 1)]);
            CHECK(canonicalKey(a) == canonicalKey(testutil::relabel(a, perm)));
        }
    }
}

TEST_CASE("graph6 known encodings") {
    Graph k3 = graph6Decode("Bw");
    CHECK(k3 == completeGraph(3));
    CHECK(graph6Encode(completeGraph(3)) == "Bw");
    CHECK(graph6Encode(pathGraph(4)) == "Ch");
    CHECK(graph6Decode("?").n() == 0);
}

TEST_CASE("graph6 round-trips") {
    for (int n : {0, 1, 2, 5, 30, 62, 63, 64, 100}) {
        Graph g = testutil::randomGraph(n, 0.37, std::uint64_t(n) * 77 + 1);
        CHECK(graph6Decode(graph6Encode(g)) == g);
    }
}

TEST_CASE("graph6 parse errors carry offsets") {
    CHECK_THROWS_WITH_AS(graph6Decode(""), doctest::Contains("at byte 0"), Error);
    CHECK_THROWS_WITH_AS(graph6Decode("B"), doctest::Contains("at byte 1"), Error);
    CHECK_THROWS_WITH_AS(graph6Decode("B\x01"), doctest::Contains("at byte 1"), Error);
    CHECK_THROWS_AS(graph6Decode("Bww"), Error);  // trailing bytes
}

TEST_CASE("immutable edits return new graphs") {
    Graph g = pathGraph(3);
    Graph h = g.withEdge(0, 2);
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(h.adjacent(0, 2));
    CHECK(h.withoutEdge(0, 2) == g);
    CHECK(g.withToggled(0, 2) == h);
    CHECK_THROWS_AS(g.withEdge(1, 1), Error);
}
