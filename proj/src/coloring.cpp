#include "chibound/coloring.hpp"

namespace chibound {

bool validate(const Graph& g, const Coloring& c) {
    if (int(c.assignment.size()) != g.n())
        fail(Errc::InvalidColoring, "assignment size does not match vertex count");
    for (int v = 0; v < g.n(); ++v)
        if (c.assignment[std::size_t(v)] < 1)
            fail(Errc::InvalidColoring, "vertex " + std::to_string(v) + " has no color");
    bool proper = true;
    g.forEachEdge([&](int u, int v) {
        if (c.assignment[std::size_t(u)] == c.assignment[std::size_t(v)]) proper = false;
    });
    return proper;
}

} // namespace chibound
