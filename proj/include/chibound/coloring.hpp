#ifndef CHIBOUND_COLORING_HPP
#define CHIBOUND_COLORING_HPP

#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

/// Total assignment vertex -> color in {1..k}; k is the number of distinct
/// colors actually used.
struct Coloring {
    std::vector<int> assignment;
    int k = 0;
};

/// True iff the coloring is proper.  Throws on a partial or missized
/// assignment.
bool validate(const Graph& g, const Coloring& c);

} // namespace chibound

#endif
