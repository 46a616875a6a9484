#ifndef CHIBOUND_BOUNDS_HPP
#define CHIBOUND_BOUNDS_HPP

#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Partition of V into parts that each induce a complete graph.
struct CliqueCover {
    std::vector<VertexSet> parts;
};

/// Covers a (4K1, co-(P3+P2))-free graph by cliques: split into join factors
/// (connected components of the complement), color each factor's complement,
/// turn color classes into cliques.  At most 7 parts per factor.
CliqueCover cliqueCover(const Graph& g);

struct BoundReport {
    bool pass = false;
    int n = 0;
    int omega = 0;
    int value = 0; // the checked quantity (n, or the chromatic number)
    int bound = 0; // 7*omega or 4*omega
};

/// n <= 7*omega for (4K1, co-(P3+P2))-free graphs.
BoundReport verifyOrderBound(const Graph& g);
/// chromatic number <= 4*omega, established by the exact oracle.
BoundReport verifyChiBound(const Graph& g);

} // namespace chibound

#endif
