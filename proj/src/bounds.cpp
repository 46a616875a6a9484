#include "chibound/bounds.hpp"

#include "chibound/colorer.hpp"
#include "chibound/oracle.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

namespace {

void requireBoundsMember(const Graph& g) {
    MembershipCertificate cert = isBoundsClassMember(g);
    if (!cert.member)
        fail(Errc::ClassViolation, "graph contains an induced " + cert.violated);
}

/// Connected components of the complement, as vertex sets of g.
std::vector<VertexSet> joinFactors(const Graph& g) {
    std::vector<VertexSet> factors;
    VertexSet todo = VertexSet::range(g.n());
    while (!todo.empty()) {
        VertexSet comp;
        VertexSet frontier = VertexSet::of({todo.first()});
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet expand;
            for (int v : frontier) {
                VertexSet coNbrs = (todo - comp) - g.neighborSet(v);
                expand |= coNbrs;
            }
            frontier = expand - comp;
        }
        factors.push_back(comp);
        todo -= comp;
    }
    return factors;
}

} // namespace

CliqueCover cliqueCover(const Graph& g) {
    requireBoundsMember(g);
    if (g.n() > 64) fail(Errc::UnsupportedSize, "clique cover needs n <= 64");
    // Join factors are pairwise complete to each other, so part i of one
    // factor composes with part i of the next into one larger clique.
    std::vector<VertexSet> merged;
    for (const VertexSet& factor : joinFactors(g)) {
        const std::vector<int> verts = factor.toVector();
        const Graph co = complement(induced(g, factor));
        const ColorOutcome outcome = color(co);
        if (std::size_t(outcome.coloring.k) > merged.size())
            merged.resize(std::size_t(outcome.coloring.k));
        for (std::size_t local = 0; local < verts.size(); ++local) {
            const int c = outcome.coloring.assignment[local];
            merged[std::size_t(c - 1)].add(verts[local]);
        }
    }
    CliqueCover cover;
    for (const VertexSet& part : merged)
        if (!part.empty()) cover.parts.push_back(part);
    return cover;
}

BoundReport verifyOrderBound(const Graph& g) {
    requireBoundsMember(g);
    const int omega = cliqueNumber(g).value;
    BoundReport r;
    r.n = g.n();
    r.omega = omega;
    r.value = g.n();
    r.bound = 7 * omega;
    r.pass = r.value <= r.bound;
    return r;
}

BoundReport verifyChiBound(const Graph& g) {
    requireBoundsMember(g);
    const int omega = cliqueNumber(g).value;
    BoundReport r;
    r.n = g.n();
    r.omega = omega;
    r.value = exactChromatic(g).value;
    r.bound = 4 * omega;
    r.pass = r.value <= r.bound;
    return r;
}

} // namespace chibound
