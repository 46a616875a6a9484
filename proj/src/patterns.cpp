#include "chibound/patterns.hpp"

#include <algorithm>

namespace chibound {

namespace {

std::vector<std::string> numberedRoles(int n) {
    std::vector<std::string> roles;
    roles.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) roles.push_back(std::to_string(i));
    return roles;
}

Pattern path(const std::string& name, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {name, Graph(n, e), {}, numberedRoles(n)};
}

Pattern cycle(const std::string& name, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {name, Graph(n, e), {}, numberedRoles(n)};
}

Pattern complete(const std::string& name, int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return {name, Graph(n, e), {}, numberedRoles(n)};
}

// Two disjoint triangles {v1,v2,v3} and {u1,u2,u3} joined by the edges u1v1
// and u3v3.  Role order v1 v2 v3 u1 u2 u3.
const std::vector<std::pair<int, int>> kCoDominoEdges = {
    {3, 0}, {0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, // six-cycle u1 v1 v2 v3 u3 u2
    {0, 2}, {3, 5},                                 // chords v1v3, u1u3
};

const std::vector<std::string> kSixRoles = {"v1", "v2", "v3", "u1", "u2", "u3"};
const std::vector<std::string> kSevenRoles = {"v1", "v2", "v3", "u1", "u2", "u3", "u"};
const std::vector<std::string> kEightRoles = {"v1", "v2", "v3", "u1", "u2", "u3", "u", "x"};

std::vector<std::pair<int, int>> plus(std::vector<std::pair<int, int>> base,
                                      std::initializer_list<std::pair<int, int>> extra) {
    base.insert(base.end(), extra);
    return base;
}

std::vector<Pattern> buildCatalog() {
    std::vector<Pattern> cat;

    cat.push_back(path("p2", 2));
    cat.push_back(path("p3", 3));
    cat.push_back(path("p4", 4));
    cat.push_back(path("p5", 5));
    cat.push_back(cycle("c4", 4));
    cat.push_back(cycle("c5", 5));
    cat.push_back(cycle("c6", 6));
    cat.push_back(complete("k3", 3));
    cat.push_back(complete("k4", 4));
    cat.push_back({"2k2", Graph(4, {{0, 1}, {2, 3}}), {}, numberedRoles(4)});
    cat.push_back({"4k1", Graph(4), {}, numberedRoles(4)});
    cat.push_back({"p3up2", Graph(5, {{0, 1}, {1, 2}, {3, 4}}), {}, numberedRoles(5)});
    cat.push_back({"k3up2", Graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}), {}, numberedRoles(5)});
    cat.push_back({"diamond", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), {}, numberedRoles(4)});

    cat.push_back({"codomino", Graph(6, kCoDominoEdges), {}, kSixRoles});

    // Family and variants over codomino plus two outside vertices u, x.
    cat.push_back({"codomino1",
                   Graph(8, plus(kCoDominoEdges,
                                 {{6, 3}, {6, 4}, {6, 0}, {6, 1}, {7, 1}, {7, 4}})),
                   {{7, 6}},
                   kEightRoles});
    cat.push_back({"codomino2",
                   Graph(8, plus(kCoDominoEdges,
                                 {{6, 3}, {6, 4}, {6, 0}, {6, 2}, {7, 1}, {7, 4}, {7, 6}})),
                   {},
                   kEightRoles});
    cat.push_back({"codomino3",
                   Graph(8, plus(kCoDominoEdges,
                                 {{6, 3}, {6, 4}, {6, 0}, {6, 2}, {7, 1}, {7, 4}})),
                   {},
                   kEightRoles});

    // codomino with the extra chord u1v3
    cat.push_back({"coa", Graph(6, plus(kCoDominoEdges, {{3, 2}})), {}, kSixRoles});

    // Six-cycle v1 v2 v3 u3 u2 u1 (role order v1 v2 v3 u1 u2 u3) with one or
    // five extra chords, plus an outside vertex u.
    const std::vector<std::pair<int, int>> hole6 = {
        {0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0}};
    cat.push_back({"x1",
                   Graph(7, plus(hole6, {{0, 2}, {6, 1}, {6, 4}})),
                   {},
                   kSevenRoles});
    cat.push_back({"x2",
                   Graph(7, plus(hole6, {{0, 2}, {2, 3}, {3, 5}, {1, 6}, {6, 4}})),
                   {},
                   kSevenRoles});

    // Five-cycle v1..v5 plus v6 adjacent to v3, v4, v5 only.
    cat.push_back({"cotwinc5",
                   Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 2}, {5, 3}, {5, 4}}),
                   {},
                   {"v1", "v2", "v3", "v4", "v5", "v6"}});

    // Family: six-cycle plus u adjacent to v1, v2, u2; uu1 unconstrained.
    cat.push_back({"yfam",
                   Graph(7, plus(hole6, {{6, 0}, {6, 1}, {6, 4}})),
                   {{6, 3}},
                   kSevenRoles});

    // Six-cycle u1 v1 v2 v3 u3 u2 plus the single chord v1v3.
    cat.push_back({"chi37",
                   Graph(6, {{3, 0}, {0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {0, 2}}),
                   {},
                   kSixRoles});

    // Complement of P3+P2 on five vertices.
    {
        Graph p3up2(5, {{0, 1}, {1, 2}, {3, 4}});
        cat.push_back({"cop3up2", complement(p3up2), {}, numberedRoles(5)});
    }
    return cat;
}

// Backtracking matcher.  Pattern vertices are taken in static
// required-degree-descending order; host candidates ascend, so the first
// witness found is the lexicographically least image sequence in match order.
struct Matcher {
    const Graph& host;
    const Pattern& p;
    std::vector<int> order;    // match order over pattern vertices
    std::vector<int> reqDeg;   // required degree per pattern vertex
    std::vector<int> image;    // pattern vertex -> host vertex or -1
    std::vector<char> used;

    Matcher(const Graph& h, const Pattern& pat) : host(h), p(pat) {
        const int k = p.graph.n();
        reqDeg.assign(std::size_t(k), 0);
        for (int u = 0; u < k; ++u) {
            for (int v = 0; v < k; ++v)
                if (v != u && p.graph.adjacent(u, v) && !p.isOptionalPair(u, v))
                    ++reqDeg[std::size_t(u)];
        }
        order.resize(std::size_t(k));
        for (int i = 0; i < k; ++i) order[std::size_t(i)] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return reqDeg[std::size_t(a)] > reqDeg[std::size_t(b)];
        });
        image.assign(std::size_t(k), -1);
        used.assign(std::size_t(host.n()), 0);
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        const int u = order[depth];
        for (int cand = 0; cand < host.n(); ++cand) {
            if (used[std::size_t(cand)]) continue;
            if (host.degree(cand) < reqDeg[std::size_t(u)]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const int w = order[d];
                if (p.isOptionalPair(u, w)) continue;
                if (p.graph.adjacent(u, w) != host.adjacent(cand, image[std::size_t(w)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[std::size_t(u)] = cand;
            used[std::size_t(cand)] = 1;
            if (search(depth + 1)) return true;
            used[std::size_t(cand)] = 0;
            image[std::size_t(u)] = -1;
        }
        return false;
    }
};

} // namespace

int Pattern::roleIndex(std::string_view role) const {
    for (std::size_t i = 0; i < roles.size(); ++i)
        if (roles[i] == role) return int(i);
    fail(Errc::UnknownName, "pattern " + name + " has no role " + std::string(role));
}

bool Pattern::isOptionalPair(int u, int v) const {
    for (auto [a, b] : optionalEdges)
        if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
}

const std::vector<Pattern>& catalog() {
    static const std::vector<Pattern> cat = buildCatalog();
    return cat;
}

const Pattern& patternByName(std::string_view name) {
    for (const Pattern& p : catalog())
        if (p.name == name) return p;
    fail(Errc::UnknownName, "unknown pattern: " + std::string(name));
}

const Pattern& patternP2uP1() {
    static const Pattern p{"p2up1", Graph(3, {{0, 1}}), {}, {"v1", "v2", "v3"}};
    return p;
}

bool embeddingValid(const Graph& host, const Pattern& p, const Embedding& e) {
    const int k = p.graph.n();
    if (int(e.map.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (e.map[std::size_t(i)] < 0 || e.map[std::size_t(i)] >= host.n()) return false;
        for (int j = i + 1; j < k; ++j) {
            if (e.map[std::size_t(i)] == e.map[std::size_t(j)]) return false;
            if (p.isOptionalPair(i, j)) continue;
            if (p.graph.adjacent(i, j) != host.adjacent(e.map[std::size_t(i)], e.map[std::size_t(j)]))
                return false;
        }
    }
    return true;
}

std::optional<Embedding> containsInduced(const Graph& host, const Pattern& p) {
    if (p.graph.n() > host.n()) return std::nullopt;
    Matcher m(host, p);
    if (!m.search(0)) return std::nullopt;
    return Embedding{std::move(m.image)};
}

MembershipCertificate isClassMember(const Graph& g) {
    if (auto e = containsInduced(g, patternByName("k4")))
        return {false, "k4", std::move(e)};
    if (auto e = containsInduced(g, patternByName("p3up2")))
        return {false, "p3up2", std::move(e)};
    return {true, "", std::nullopt};
}

MembershipCertificate isBoundsClassMember(const Graph& g) {
    if (auto e = containsInduced(g, patternByName("4k1")))
        return {false, "4k1", std::move(e)};
    if (auto e = containsInduced(g, patternByName("cop3up2")))
        return {false, "cop3up2", std::move(e)};
    return {true, "", std::nullopt};
}

} // namespace chibound
