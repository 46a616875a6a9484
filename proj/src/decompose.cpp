#include "chibound/decompose.hpp"

#include "chibound/oracle.hpp"

namespace chibound {

TriangleDecomposition aroundTriangle(const Graph& g, const std::array<int, 3>& t,
                                     bool assertK4Free) {
    for (int v : t)
        if (v < 0 || v >= g.n()) fail(Errc::InvalidTriangle, "triangle vertex out of range");
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        fail(Errc::InvalidTriangle, "triangle vertices must be distinct");
    if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[1], t[2]) || !g.adjacent(t[0], t[2]))
        fail(Errc::InvalidTriangle, "triple does not induce K3");

    TriangleDecomposition d;
    d.triangle = t;
    VertexSet tri = VertexSet::of({t[0], t[1], t[2]});
    for (int v = 0; v < g.n(); ++v) {
        if (tri.contains(v)) continue;
        int hits = 0;
        for (int w : t) hits += g.adjacent(v, w) ? 1 : 0;
        switch (hits) {
        case 0: d.a0.add(v); break;
        case 1: d.a1.add(v); break;
        case 2: d.a2.add(v); break;
        default:
            if (assertK4Free)
                fail(Errc::InvalidConfiguration,
                     "vertex " + std::to_string(v) + " dominates the triangle (K4 present)");
            d.a3.add(v);
        }
    }

    d.b[0] = d.a0;
    for (int v : d.a1) {
        if (g.adjacent(v, t[0])) d.b[0].add(v);
        else if (g.adjacent(v, t[1])) d.b[1].add(v);
        else d.b[2].add(v);
    }

    VertexSet assigned;
    for (int i = 0; i < 3; ++i) {
        int vi = t[std::size_t(i)];
        int vprev = t[std::size_t((i + 2) % 3)];
        VertexSet s = (g.neighborSet(vi) & g.neighborSet(vprev) & d.a2) - assigned;
        d.a2Split[std::size_t(i)] = s;
        assigned |= s;
    }
    return d;
}

BiP3Report verifyBiP3Free(const Graph& g, const TriangleDecomposition& d) {
    for (int i = 0; i < 3; ++i) {
        VertexSet bi = d.b[std::size_t(i)];
        for (int mid : bi) {
            VertexSet nbrs = g.neighborSet(mid) & bi;
            if (nbrs.size() < 2) continue;
            for (int a : nbrs)
                for (int c : nbrs) {
                    if (c <= a) continue;
                    if (!g.adjacent(a, c)) return {false, i, {a, mid, c}};
                }
        }
    }
    return {};
}

D1D2Partition d1d2(const Graph& g, bool closedNeighborhood) {
    D1D2Partition out;
    VertexSet all = VertexSet::range(g.n());
    for (int x = 0; x < g.n(); ++x) {
        VertexSet rest = all - g.neighborSet(x);
        if (closedNeighborhood) rest.remove(x);
        if (cliqueNumber(induced(g, rest)).value <= 2) out.d1.add(x);
        else out.d2.add(x);
    }
    return out;
}

FiveSetSplit fiveSetSplit(const Graph& g, int v1, int v2, int v3) {
    for (int v : {v1, v2, v3})
        if (v < 0 || v >= g.n()) fail(Errc::InvalidConfiguration, "vertex out of range");
    if (v1 == v2 || v1 == v3 || v2 == v3)
        fail(Errc::InvalidConfiguration, "vertices must be distinct");
    if (!g.adjacent(v1, v2))
        fail(Errc::InvalidConfiguration, "v1 and v2 must be adjacent");
    if (g.adjacent(v3, v1) || g.adjacent(v3, v2))
        fail(Errc::InvalidConfiguration, "v3 must be nonadjacent to v1 and v2");
    D1D2Partition dd = d1d2(g);
    if (!dd.d1.contains(v1) || !dd.d1.contains(v2) || !dd.d1.contains(v3))
        fail(Errc::InvalidConfiguration, "all three vertices must lie in d1");

    VertexSet n1 = g.neighborSet(v1);
    VertexSet n2 = g.neighborSet(v2);
    VertexSet n3 = g.neighborSet(v3);
    VertexSet both = VertexSet::of({v1, v2});
    n1 -= both;
    n2 -= both;

    FiveSetSplit out;
    VertexSet assigned;
    auto place = [&](int idx, VertexSet s) {
        s -= assigned;
        out.sets[std::size_t(idx)] = s;
        assigned |= s;
    };
    place(4, n1 & n2);
    place(0, n1 - n3);
    place(1, n1 & n3);
    place(2, n2 - n3);
    place(3, n2 & n3);
    return out;
}

} // namespace chibound
