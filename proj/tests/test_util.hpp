#ifndef CHIBOUND_TEST_UTIL_HPP
#define CHIBOUND_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "chibound/generators.hpp"
#include "chibound/graph.hpp"

namespace testutil {

// brute-force isomorphism over all relabelings; fine up to n ~ 8
inline bool isomorphic(const chibound::Graph& a, const chibound::Graph& b) {
    if (a.n() != b.n()) return false;
    const int n = a.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.adjacent(u, v) !=
                    b.adjacent(perm[std::size_t(u)], perm[std::size_t(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline chibound::Graph randomGraph(int n, double p, std::uint64_t seed) {
    chibound::Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.real() < p) edges.emplace_back(u, v);
    return chibound::Graph(n, edges);
}

inline chibound::Graph relabel(const chibound::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    g.forEachEdge([&](int u, int v) {
        edges.emplace_back(perm[std::size_t(u)], perm[std::size_t(v)]);
    });
    return chibound::Graph(g.n(), edges);
}

} // namespace testutil

#endif
