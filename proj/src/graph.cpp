#include "chibound/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace chibound {

namespace {
constexpr int kMaxVertices = 4096;
}

// -- VertexSet ---------------------------------------------------------------

VertexSet VertexSet::range(int n) {
    if (n < 0 || n > 64) fail(Errc::UnsupportedSize, "VertexSet::range needs 0 <= n <= 64");
    if (n == 64) return fromBits(~std::uint64_t(0));
    return fromBits((std::uint64_t(1) << n) - 1);
}

void VertexSet::add(int v) {
    if (v < 0 || v >= 64) fail(Errc::InvalidSet, "vertex outside 0..63");
    bits_ |= std::uint64_t(1) << v;
}

int VertexSet::size() const { return std::popcount(bits_); }

int VertexSet::first() const {
    if (bits_ == 0) return -1;
    return std::countr_zero(bits_);
}

std::vector<int> VertexSet::toVector() const {
    std::vector<int> out;
    out.reserve(std::size_t(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

int VertexSet::iterator::operator*() const { return std::countr_zero(rest_); }

// -- Graph --------------------------------------------------------------------

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) fail(Errc::UnsupportedSize, "vertex count out of range");
    words_ = (n + 63) / 64;
    bits_.assign(std::size_t(n) * std::size_t(words_), 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) setEdge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) setEdge(u, v);
}

void Graph::setEdge(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    if (u == v) fail(Errc::InvalidArgument, "self-loop rejected");
    bits_[std::size_t(u) * words_ + std::size_t(v >> 6)] |= std::uint64_t(1) << (v & 63);
    bits_[std::size_t(v) * words_ + std::size_t(u >> 6)] |= std::uint64_t(1) << (u & 63);
}

void Graph::clearEdge(int u, int v) {
    checkVertex(u);
    checkVertex(v);
    bits_[std::size_t(u) * words_ + std::size_t(v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    bits_[std::size_t(v) * words_ + std::size_t(u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
}

int Graph::edgeCount() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return int(total / 2);
}

int Graph::degree(int v) const {
    checkVertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[std::size_t(v) * words_ + std::size_t(w)]);
    return d;
}

std::uint64_t Graph::row64(int v) const {
    checkVertex(v);
    if (n_ > 64) fail(Errc::UnsupportedSize, "single-word row needs n <= 64");
    return n_ == 0 ? 0 : bits_[std::size_t(v)];
}

Graph Graph::withEdge(int u, int v) const {
    Graph g = *this;
    g.setEdge(u, v);
    return g;
}

Graph Graph::withoutEdge(int u, int v) const {
    Graph g = *this;
    g.checkVertex(u);
    g.checkVertex(v);
    g.clearEdge(u, v);
    return g;
}

Graph Graph::withToggled(int u, int v) const {
    return adjacent(u, v) ? withoutEdge(u, v) : withEdge(u, v);
}

Graph Graph::fromUpperTriangleMask(int n, std::uint64_t mask) {
    if (n < 0 || n > 11) fail(Errc::UnsupportedSize, "triangle mask path needs n <= 11");
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1u) g.setEdge(u, v);
    return g;
}

std::uint64_t Graph::upperTriangleMask() const {
    if (n_ > 11) fail(Errc::UnsupportedSize, "triangle mask path needs n <= 11");
    std::uint64_t mask = 0;
    int bit = 0;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (adjacent(u, v)) mask |= std::uint64_t(1) << bit;
    return mask;
}

// -- neighborhood algebra -------------------------------------------------

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.n(), edges);
}

Graph induced(const Graph& g, VertexSet s) {
    if (g.n() > 64) fail(Errc::UnsupportedSize, "induced subgraph needs n <= 64");
    if ((s.bits() & ~VertexSet::range(g.n()).bits()) != 0)
        fail(Errc::InvalidSet, "set contains out-of-range vertices");
    std::vector<int> verts = s.toVector();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) edges.emplace_back(int(i), int(j));
    return Graph(int(verts.size()), edges);
}

VertexSet neighbors(const Graph& g, int v) { return g.neighborSet(v); }

VertexSet nonNeighbors(const Graph& g, int v) {
    VertexSet all = VertexSet::range(g.n());
    VertexSet closed = g.neighborSet(v);
    closed.add(v);
    return all - closed;
}

VertexSet jointComplementSet(const Graph& g, int v1, int v2) {
    VertexSet out = VertexSet::range(g.n()) - g.neighborSet(v1) - g.neighborSet(v2);
    out.remove(v1);
    out.remove(v2);
    return out;
}

bool completeTo(const Graph& g, VertexSet s1, VertexSet s2) {
    if (!(s1 & s2).empty()) fail(Errc::InvalidArgument, "sets overlap");
    for (int v : s1)
        if ((g.row64(v) & s2.bits()) != s2.bits()) return false;
    return true;
}

bool anticompleteTo(const Graph& g, VertexSet s1, VertexSet s2) {
    if (!(s1 & s2).empty()) fail(Errc::InvalidArgument, "sets overlap");
    for (int v : s1)
        if ((g.row64(v) & s2.bits()) != 0) return false;
    return true;
}

bool isStableSet(const Graph& g, VertexSet s) {
    for (int v : s)
        if ((g.row64(v) & s.bits()) != 0) return false;
    return true;
}

std::optional<std::pair<int, int>> firstEdgeInside(const Graph& g, VertexSet s) {
    for (int v : s) {
        std::uint64_t hits = g.row64(v) & s.bits();
        hits &= ~((std::uint64_t(2) << v) - 1); // only partners above v
        if (hits != 0) return std::pair<int, int>{v, std::countr_zero(hits)};
    }
    return std::nullopt;
}

int edgesInsideAtMost(const Graph& g, VertexSet s, int cap) {
    int count = 0;
    for (int v : s) {
        std::uint64_t hits = g.row64(v) & s.bits();
        hits &= ~((std::uint64_t(2) << v) - 1);
        count += std::popcount(hits);
        if (count > cap) return count;
    }
    return count;
}

bool componentsAtMostTwo(const Graph& g, VertexSet s) {
    for (int v : s) {
        std::uint64_t inside = g.row64(v) & s.bits();
        if (std::popcount(inside) > 1) return false;
        if (inside != 0) {
            int w = std::countr_zero(inside);
            // the partner must see nobody else inside s
            std::uint64_t back = g.row64(w) & s.bits();
            if (std::popcount(back) > 1) return false;
        }
    }
    return true;
}

std::optional<std::pair<VertexSet, VertexSet>> twoColorCliquePairs(const Graph& g, VertexSet s) {
    if (!componentsAtMostTwo(g, s)) return std::nullopt;
    VertexSet left, right;
    for (int v : s) {
        if (left.contains(v) || right.contains(v)) continue;
        std::uint64_t inside = g.row64(v) & s.bits();
        left.add(v);
        if (inside != 0) right.add(std::countr_zero(inside));
    }
    return std::pair{left, right};
}

std::optional<std::pair<int, int>> firstNonadjacentPairInside(const Graph& g, VertexSet s) {
    for (int v : s) {
        std::uint64_t miss = s.bits() & ~g.row64(v);
        miss &= ~((std::uint64_t(2) << v) - 1);
        if (miss != 0) return std::pair<int, int>{v, std::countr_zero(miss)};
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> firstTriangleInside(const Graph& g, VertexSet s) {
    for (int a : s) {
        std::uint64_t above = ~((std::uint64_t(2) << a) - 1);
        VertexSet nbA = VertexSet::fromBits(g.row64(a) & s.bits() & above);
        for (int b : nbA) {
            std::uint64_t common = nbA.bits() & g.row64(b) & ~((std::uint64_t(2) << b) - 1);
            if (common != 0) return std::array<int, 3>{a, b, std::countr_zero(common)};
        }
    }
    return std::nullopt;
}

// -- canonical key ----------------------------------------------------------

std::string canonicalKey(const Graph& g) {
    if (g.n() > 10) fail(Errc::UnsupportedSize, "exact canonical key needs n <= 10");
    const int n = g.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t mask = 0;
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if (g.adjacent(perm[std::size_t(u)], perm[std::size_t(v)]))
                    mask |= std::uint64_t(1) << bit;
        best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) best = 0;

    std::string key;
    key.push_back(char(n));
    for (int i = 7; i >= 0; --i) key.push_back(char((best >> (8 * i)) & 0xff));
    return key;
}

// -- graph6 -------------------------------------------------------------------

std::string graph6Encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        fail(Errc::UnsupportedSize, "graph6 encoder limited to n <= 258047");
    }
    int group = 0;
    int used = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++used == 6) {
                out.push_back(char(group + 63));
                group = 0;
                used = 0;
            }
        }
    }
    if (used != 0) out.push_back(char((group << (6 - used)) + 63));
    return out;
}

Graph graph6Decode(std::string_view text) {
    auto bad = [&](std::size_t offset, const std::string& why) -> int {
        fail(Errc::Parse, "graph6: " + why + " at byte " + std::to_string(offset));
    };
    std::size_t pos = 0;
    auto sixBits = [&]() -> int {
        if (pos >= text.size()) return bad(pos, "unexpected end of input");
        unsigned char c = (unsigned char)text[pos];
        if (c < 63 || c > 126) return bad(pos, "byte outside graph6 alphabet");
        ++pos;
        return c - 63;
    };

    long n;
    if (!text.empty() && (unsigned char)text[0] == 126) {
        ++pos;
        if (pos < text.size() && (unsigned char)text[pos] == 126)
            bad(pos, "graphs this large are not supported");
        long a = sixBits(), b = sixBits(), c = sixBits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixBits();
    }
    if (n > kMaxVertices) bad(0, "vertex count above supported limit");

    std::vector<std::pair<int, int>> edges;
    int group = 0;
    int left = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (left == 0) {
                group = sixBits();
                left = 6;
            }
            if ((group >> (left - 1)) & 1) edges.emplace_back(u, v);
            --left;
        }
    }
    if (left > 0 && (group & ((1 << left) - 1)) != 0)
        bad(pos - 1, "nonzero padding bits");
    if (pos != text.size()) bad(pos, "trailing bytes after graph");
    return Graph(int(n), edges);
}

} // namespace chibound
