#ifndef CHIBOUND_GRAPH_HPP
#define CHIBOUND_GRAPH_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chibound/errors.hpp"

namespace chibound {

/// Subset of {0..63}, the vertex-set carrier for every decomposition and
/// coloring routine.  One machine word, so all set algebra is constant time.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet fromBits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    /// {0, 1, ..., n-1}
    static VertexSet range(int n);

    bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v) & 1u; }
    void add(int v);
    void remove(int v) { bits_ &= ~(std::uint64_t(1) << v); }

    int size() const;
    bool empty() const { return bits_ == 0; }
    /// Lowest member, or -1 when empty.
    int first() const;

    std::uint64_t bits() const { return bits_; }
    std::vector<int> toVector() const;

    VertexSet operator|(VertexSet o) const { return fromBits(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return fromBits(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return fromBits(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const;
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph.  Vertices are dense integers 0..n-1,
/// adjacency is kept as per-vertex bit rows.  Graphs with n <= 64 get the
/// single-word fast path used by the decomposition and coloring engine;
/// larger graphs still support adjacency queries, complement, graph6 I/O and
/// induced-pattern detection.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edgeCount() const;

    bool adjacent(int u, int v) const {
        checkVertex(u);
        checkVertex(v);
        return (bits_[std::size_t(u) * words_ + std::size_t(v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const;

    /// Adjacency row as one word; requires n <= 64.
    std::uint64_t row64(int v) const;
    VertexSet neighborSet(int v) const { return VertexSet::fromBits(row64(v)); }

    // Mutation is expressed as construction of a new value.
    Graph withEdge(int u, int v) const;
    Graph withoutEdge(int u, int v) const;
    Graph withToggled(int u, int v) const;

    /// Builds from the upper-triangle bit mask in column-major pair order
    /// (0,1),(0,2),(1,2),(0,3),...; requires n <= 11.
    static Graph fromUpperTriangleMask(int n, std::uint64_t mask);
    std::uint64_t upperTriangleMask() const;

    template <class F>
    void forEachEdge(F f) const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) f(u, v);
    }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;

    void checkVertex(int v) const {
        if (v < 0 || v >= n_) fail(Errc::InvalidArgument, "vertex out of range");
    }
    void setEdge(int u, int v);
    void clearEdge(int u, int v);
};

// -- neighborhood algebra -------------------------------------------------

Graph complement(const Graph& g);
/// Induced subgraph on s, vertices relabeled densely in ascending order.
Graph induced(const Graph& g, VertexSet s);

VertexSet neighbors(const Graph& g, int v);
/// V minus the closed neighborhood of v.
VertexSet nonNeighbors(const Graph& g, int v);
/// V minus {v1, v2} minus N(v1) minus N(v2).
VertexSet jointComplementSet(const Graph& g, int v1, int v2);

/// Every pair across s1 x s2 adjacent / non-adjacent.  The sets must be
/// disjoint.
bool completeTo(const Graph& g, VertexSet s1, VertexSet s2);
bool anticompleteTo(const Graph& g, VertexSet s1, VertexSet s2);

bool isStableSet(const Graph& g, VertexSet s);
std::optional<std::pair<int, int>> firstEdgeInside(const Graph& g, VertexSet s);
/// Number of edges inside s, capped at `cap` (early exit).
int edgesInsideAtMost(const Graph& g, VertexSet s, int cap);
/// True when every connected component of g[s] has at most two vertices.
bool componentsAtMostTwo(const Graph& g, VertexSet s);
/// Splits s into two stable halves; requires componentsAtMostTwo(g, s).
std::optional<std::pair<VertexSet, VertexSet>> twoColorCliquePairs(const Graph& g, VertexSet s);
std::optional<std::pair<int, int>> firstNonadjacentPairInside(const Graph& g, VertexSet s);
std::optional<std::array<int, 3>> firstTriangleInside(const Graph& g, VertexSet s);

/// Isomorphism-complete key: lexicographic minimum of the upper-triangle
/// bitstring over all vertex permutations.  Exact, n <= 10 only.
std::string canonicalKey(const Graph& g);

// -- graph6 ----------------------------------------------------------------

std::string graph6Encode(const Graph& g);
/// Decodes one graph6 value; parse errors carry the byte offset.
Graph graph6Decode(std::string_view text);

} // namespace chibound

#endif
