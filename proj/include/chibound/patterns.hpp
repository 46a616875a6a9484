#ifndef CHIBOUND_PATTERNS_HPP
#define CHIBOUND_PATTERNS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// A named forbidden/structural pattern.  `optionalEdges` marks vertex pairs
/// a family leaves unconstrained; detection ignores those pairs entirely,
/// every other pair must match exactly (edge to edge, non-edge to non-edge).
struct Pattern {
    std::string name;
    Graph graph;
    std::vector<std::pair<int, int>> optionalEdges;
    std::vector<std::string> roles;

    int roleIndex(std::string_view role) const;
    bool isOptionalPair(int u, int v) const;
};

/// Every named pattern, in the stable CLI order:
/// p2 p3 p4 p5 c4 c5 c6 k3 k4 2k2 4k1 p3up2 k3up2 diamond codomino
/// codomino1 codomino2 codomino3 coa x1 x2 cotwinc5 yfam chi37 cop3up2.
const std::vector<Pattern>& catalog();
const Pattern& patternByName(std::string_view name);

/// P2 plus an isolated vertex; used by the D1 dispatch, not part of the
/// public catalog.
const Pattern& patternP2uP1();

/// Injective vertex map pattern-vertex -> host-vertex.
struct Embedding {
    std::vector<int> map;
};

bool embeddingValid(const Graph& host, const Pattern& p, const Embedding& e);

/// Deterministic first induced occurrence (backtracking over pattern
/// vertices in static degree-descending order, host candidates ascending),
/// or nothing.
std::optional<Embedding> containsInduced(const Graph& host, const Pattern& p);

struct MembershipCertificate {
    bool member = false;
    std::string violated;             // pattern name when member == false
    std::optional<Embedding> witness; // occurrence of the violated pattern
};

/// Membership in the coloring engine's class: no induced P3+P2, no K4.
MembershipCertificate isClassMember(const Graph& g);
/// Membership in the bounds family: no induced 4K1, no induced co-(P3+P2).
MembershipCertificate isBoundsClassMember(const Graph& g);

} // namespace chibound

#endif
