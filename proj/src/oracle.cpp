#include "chibound/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace chibound {

namespace {

struct CliqueSearch {
    const Graph& g;
    std::uint64_t best = 0;
    int bestSize = 0;

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            int size = std::popcount(r);
            if (size > bestSize) {
                bestSize = size;
                best = r;
            }
            return;
        }
        if (std::popcount(r) + std::popcount(p) <= bestSize) return;
        // pivot with most neighbors in p
        std::uint64_t px = p | x;
        int pivot = -1, pivotDeg = -1;
        for (std::uint64_t m = px; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int d = std::popcount(g.row64(v) & p);
            if (d > pivotDeg) {
                pivotDeg = d;
                pivot = v;
            }
        }
        std::uint64_t candidates = p & ~g.row64(pivot);
        for (std::uint64_t m = candidates; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            std::uint64_t bit = std::uint64_t(1) << v;
            run(r | bit, p & g.row64(v), x & g.row64(v));
            p &= ~bit;
            x |= bit;
        }
    }
};

std::vector<int> degeneracyOrder(const Graph& g) {
    const int n = g.n();
    std::vector<int> order;
    order.reserve(std::size_t(n));
    std::uint64_t remaining = VertexSet::range(n).bits();
    while (remaining != 0) {
        int pick = -1, pickDeg = n + 1;
        for (std::uint64_t m = remaining; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int d = std::popcount(g.row64(v) & remaining);
            if (d < pickDeg) {
                pickDeg = d;
                pick = v;
            }
        }
        order.push_back(pick);
        remaining &= ~(std::uint64_t(1) << pick);
    }
    // smallest-last: color the low-degree tail first means we want the
    // reverse of the peeling sequence
    std::reverse(order.begin(), order.end());
    return order;
}

struct ColorSearch {
    const Graph& g;
    int k;
    const std::vector<int>& order;
    std::vector<std::uint64_t> classes; // vertices per color
    std::vector<int> color;             // 1-based, 0 = unassigned

    ColorSearch(const Graph& gr, int kk, const std::vector<int>& ord)
        : g(gr), k(kk), order(ord), classes(std::size_t(kk), 0),
          color(std::size_t(gr.n()), 0) {}

    bool run(std::size_t depth, int usedColors) {
        if (depth == order.size()) return true;
        const int v = order[depth];
        const std::uint64_t row = g.row64(v);
        const int limit = std::min(k, usedColors + 1);
        for (int c = 1; c <= limit; ++c) {
            if ((classes[std::size_t(c - 1)] & row) != 0) continue;
            classes[std::size_t(c - 1)] |= std::uint64_t(1) << v;
            color[std::size_t(v)] = c;
            if (run(depth + 1, std::max(usedColors, c))) return true;
            classes[std::size_t(c - 1)] &= ~(std::uint64_t(1) << v);
            color[std::size_t(v)] = 0;
        }
        return false;
    }
};

int greedyUpperBound(const Graph& g, const std::vector<int>& order) {
    std::vector<int> color(std::size_t(g.n()), 0);
    int used = 0;
    for (int v : order) {
        std::uint64_t seen = 0;
        for (int w : g.neighborSet(v))
            if (color[std::size_t(w)] != 0) seen |= std::uint64_t(1) << (color[std::size_t(w)] - 1);
        int c = 1;
        while ((seen >> (c - 1)) & 1u) ++c;
        color[std::size_t(v)] = c;
        used = std::max(used, c);
    }
    return used;
}

// all (subset, bijection) pairs, with early mismatch cutoff
struct BruteMatcher {
    const Graph& host;
    const Pattern& p;
    std::vector<int> subset;

    bool permute(std::vector<int>& image, std::vector<char>& taken, std::size_t depth) {
        const int k = p.graph.n();
        if (depth == std::size_t(k)) return true;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (taken[i]) continue;
            int cand = subset[i];
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                if (p.isOptionalPair(int(depth), int(d))) continue;
                if (p.graph.adjacent(int(depth), int(d)) != host.adjacent(cand, image[d])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[depth] = cand;
            taken[i] = 1;
            if (permute(image, taken, depth + 1)) return true;
            taken[i] = 0;
        }
        return false;
    }

    bool chooseSubset(int next, int left) {
        if (left == 0) {
            std::vector<int> image(std::size_t(p.graph.n()), -1);
            std::vector<char> taken(subset.size(), 0);
            return permute(image, taken, 0);
        }
        for (int v = next; v + left <= host.n(); ++v) {
            subset.push_back(v);
            if (chooseSubset(v + 1, left - 1)) return true;
            subset.pop_back();
        }
        return false;
    }
};

} // namespace

CliqueResult cliqueNumber(const Graph& g) {
    if (g.n() > 64) fail(Errc::UnsupportedSize, "clique oracle needs n <= 64");
    if (g.n() == 0) return {0, {}};
    CliqueSearch search{g};
    search.run(0, VertexSet::range(g.n()).bits(), 0);
    return {search.bestSize, VertexSet::fromBits(search.best)};
}

std::optional<Coloring> kColorable(const Graph& g, int k) {
    if (g.n() > 64) fail(Errc::UnsupportedSize, "coloring oracle needs n <= 64");
    if (k < 1) fail(Errc::InvalidArgument, "k must be positive");
    if (g.n() == 0) return Coloring{{}, 0};
    std::vector<int> order = degeneracyOrder(g);
    ColorSearch search(g, k, order);
    if (!search.run(0, 0)) return std::nullopt;
    Coloring c;
    c.assignment = std::move(search.color);
    c.k = *std::max_element(c.assignment.begin(), c.assignment.end());
    return c;
}

ChromaticResult exactChromatic(const Graph& g) {
    if (g.n() == 0) return {0, Coloring{{}, 0}};
    CliqueResult clique = cliqueNumber(g);
    std::vector<int> order = degeneracyOrder(g);
    int ub = greedyUpperBound(g, order);
    for (int k = std::max(clique.value, 1); k <= ub; ++k) {
        if (auto c = kColorable(g, k)) return {k, std::move(*c)};
    }
    fail(Errc::Internal, "greedy bound not realized"); // unreachable
}

bool bruteContains(const Graph& host, const Pattern& p) {
    if (p.graph.n() > 8) fail(Errc::UnsupportedSize, "brute pattern limit is 8 vertices");
    if (host.n() > 12) fail(Errc::UnsupportedSize, "brute host limit is 12 vertices");
    if (p.graph.n() > host.n()) return false;
    BruteMatcher m{host, p, {}};
    m.subset.reserve(std::size_t(p.graph.n()));
    return m.chooseSubset(0, p.graph.n());
}

} // namespace chibound
