#include "chibound/generators.hpp"

#include <string>

#include "chibound/patterns.hpp"

namespace chibound {

GraphEnumerator::GraphEnumerator(int n) : n_(n) {
    if (n < 0 || n > 7) fail(Errc::UnsupportedSize, "exhaustive enumeration needs n <= 7");
    total_ = std::uint64_t(1) << (n * (n - 1) / 2);
}

std::optional<Graph> GraphEnumerator::next() {
    if (nextMask_ >= total_) return std::nullopt;
    return Graph::fromUpperTriangleMask(n_, nextMask_++);
}

namespace {

/// Deletes edges until neither forbidden pattern embeds.  Both patterns die
/// by edge deletion, so the loop terminates at the empty graph in the worst
/// case; the step budget guards pathological inputs anyway.
std::optional<Graph> repairToMember(Graph g, Rng& rng, int maxSteps) {
    const Pattern& k4 = patternByName("k4");
    const Pattern& p3up2 = patternByName("p3up2");
    for (int step = 0; step < maxSteps; ++step) {
        if (auto e = containsInduced(g, k4)) {
            // remove one of the six clique edges
            const auto& m = e->map;
            const int pick = int(rng.below(6));
            static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
            g = g.withoutEdge(m[std::size_t(pairs[pick][0])], m[std::size_t(pairs[pick][1])]);
            continue;
        }
        if (auto e = containsInduced(g, p3up2)) {
            // pattern vertices: path 0-1-2, edge 3-4; break the P2 or an end
            // edge of the P3
            const auto& m = e->map;
            switch (rng.below(3)) {
            case 0: g = g.withoutEdge(m[3], m[4]); break;
            case 1: g = g.withoutEdge(m[0], m[1]); break;
            default: g = g.withoutEdge(m[1], m[2]); break;
            }
            continue;
        }
        return g;
    }
    if (isClassMember(g).member) return g;
    return std::nullopt;
}

} // namespace

Graph randomClassMember(const GenConfig& cfg) {
    if (cfg.n < 0 || cfg.n > 64) fail(Errc::InvalidArgument, "generator needs 0 <= n <= 64");
    if (cfg.edgeProbability < 0.0 || cfg.edgeProbability > 1.0)
        fail(Errc::InvalidArgument, "edge probability outside [0, 1]");
    Rng rng(cfg.seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < cfg.n; ++u)
        for (int v = u + 1; v < cfg.n; ++v)
            if (rng.real() < cfg.edgeProbability) edges.emplace_back(u, v);
    Graph g(cfg.n, edges);
    const int budget = cfg.maxRepairSteps > 0 ? cfg.maxRepairSteps
                                              : 4 + cfg.n * cfg.n;
    auto repaired = repairToMember(std::move(g), rng, budget);
    if (!repaired) fail(Errc::GenerationFailure, "repair budget exhausted");
    if (!isClassMember(*repaired).member)
        fail(Errc::Internal, "repair loop returned a non-member");
    return *repaired;
}

Graph mutate(const Graph& g, std::uint64_t seed) {
    if (g.n() > 64) fail(Errc::UnsupportedSize, "mutation needs n <= 64");
    if (g.n() < 2) return g;
    Rng rng(seed);
    const std::uint64_t pairCount = std::uint64_t(g.n()) * (g.n() - 1) / 2;
    std::uint64_t pick = rng.below(pairCount);
    int u = 0;
    while (pick >= std::uint64_t(g.n() - 1 - u)) {
        pick -= std::uint64_t(g.n() - 1 - u);
        ++u;
    }
    const int v = u + 1 + int(pick);
    Graph flipped = g.withToggled(u, v);
    auto repaired = repairToMember(std::move(flipped), rng, 4 + g.n() * g.n());
    if (!repaired) fail(Errc::GenerationFailure, "repair budget exhausted");
    return *repaired;
}

Graph named(std::string_view name) {
    constexpr std::string_view suffix = "+edge";
    bool withOptional = false;
    std::string_view base = name;
    if (name.size() > suffix.size() &&
        name.substr(name.size() - suffix.size()) == suffix) {
        withOptional = true;
        base = name.substr(0, name.size() - suffix.size());
    }
    const Pattern& p = patternByName(base);
    if (!withOptional) return p.graph;
    if (p.optionalEdges.empty())
        fail(Errc::UnknownName, std::string(base) + " has no optional edges");
    Graph g = p.graph;
    for (auto [u, v] : p.optionalEdges) g = g.withEdge(u, v);
    return g;
}

} // namespace chibound
