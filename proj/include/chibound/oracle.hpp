#ifndef CHIBOUND_ORACLE_HPP
#define CHIBOUND_ORACLE_HPP

#include <optional>

#include "chibound/coloring.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

struct CliqueResult {
    int value = 0;
    VertexSet witness; // a clique of maximum size
};

struct ChromaticResult {
    int value = 0;
    Coloring certificate;
};

/// Exact clique number via pivoting maximal-clique enumeration with
/// best-size pruning.  n <= 64.
CliqueResult cliqueNumber(const Graph& g);

/// A proper k-coloring if one exists.  Backtracking over vertices in
/// degeneracy order; color classes are interchangeable, so a vertex may only
/// open one fresh color.  n <= 64, k >= 1.
std::optional<Coloring> kColorable(const Graph& g, int k);

/// Minimum k with certificate; lower bound seeded by the clique number,
/// upper bound by a greedy pass.
ChromaticResult exactChromatic(const Graph& g);

/// Reference detector: enumerates all |p|-subsets of the host and all
/// bijections onto the pattern.  Independent of containsInduced.
/// Limits: pattern n <= 8, host n <= 12.
bool bruteContains(const Graph& host, const Pattern& p);

} // namespace chibound

#endif
