#ifndef CHIBOUND_DECOMPOSE_HPP
#define CHIBOUND_DECOMPOSE_HPP

#include <array>
#include <optional>

#include "chibound/graph.hpp"

namespace chibound {

/// Partition of V around a fixed triangle (t1,t2,t3):
///   a0 / a1 / a2: vertices with zero / one / two neighbors on the triangle,
///   a3: vertices adjacent to all three (only possible with a K4),
///   b[0] = a0 plus the a1-vertices seeing t1 only; b[1], b[2] likewise for
///   t2, t3 without a0,
///   a2Split[i] = N(t_i) cap N(t_{i-1}) cap a2 (indices mod 3); the split
///   pairs with triangle vertex t_{i+1} to form a stable set in K4-free
///   hosts.
struct TriangleDecomposition {
    std::array<int, 3> triangle{};
    VertexSet a0, a1, a2, a3;
    std::array<VertexSet, 3> b{};
    std::array<VertexSet, 3> a2Split{};

    int partner(int i) const { return triangle[std::size_t((i + 1) % 3)]; }
};

/// Requires t to induce K3.  With assertK4Free, any vertex adjacent to the
/// whole triangle raises an error; otherwise such vertices land in a3.
TriangleDecomposition aroundTriangle(const Graph& g, const std::array<int, 3>& t,
                                     bool assertK4Free = true);

struct BiP3Report {
    bool pass = true;
    int biIndex = -1;                   // which B set failed (0-based)
    std::array<int, 3> witness{-1, -1, -1}; // an induced P3 (mid vertex second)
};

/// Checks that each g[B_i] is P3-free.
BiP3Report verifyBiP3Free(const Graph& g, const TriangleDecomposition& d);

/// d1 holds the vertices x with clique number of g minus N(x) (x retained)
/// at most two; d2 the rest.  The closed-neighborhood variant removes x too.
struct D1D2Partition {
    VertexSet d1, d2;
};
D1D2Partition d1d2(const Graph& g, bool closedNeighborhood = false);

/// The five-way split of N(v1) u N(v2) used when {v1,v2} is an edge and v3 a
/// vertex nonadjacent to both, all in d1:
///   sets[4] = N(v1) cap N(v2)                (assigned first)
///   sets[0] = N(v1) - N(v3) - sets[4]
///   sets[1] = (N(v1) cap N(v3)) - N(v2)
///   sets[2] = N(v2) - N(v3) - sets[4]
///   sets[3] = (N(v2) cap N(v3)) - N(v1)
/// v1 and v2 themselves are excluded throughout.
struct FiveSetSplit {
    std::array<VertexSet, 5> sets{};
};
FiveSetSplit fiveSetSplit(const Graph& g, int v1, int v2, int v3);

} // namespace chibound

#endif
