#ifndef CHIBOUND_GENERATORS_HPP
#define CHIBOUND_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "chibound/graph.hpp"

namespace chibound {

/// splitmix64 stream; identical output on every platform for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
    double real() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

struct GenConfig {
    int n = 8;
    double edgeProbability = 0.5;
    std::uint64_t seed = 0;
    int maxRepairSteps = 0; // 0 = derive from n
};

/// Streams every labeled graph on n vertices (n <= 7) in ascending
/// upper-triangle-mask order.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n);
    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::uint64_t nextMask_ = 0;
    std::uint64_t total_;
};

/// Erdos-Renyi draw followed by an edge-deleting repair loop until the graph
/// has no induced K4 and no induced P3+P2; the result is certified, never
/// assumed.  Throws Errc::GenerationFailure when the repair budget runs out.
Graph randomClassMember(const GenConfig& cfg);

/// Flips one uniformly chosen pair, then repairs class membership.
Graph mutate(const Graph& g, std::uint64_t seed);

/// Catalog pattern by CLI name; the required-edges graph.  Family variants
/// with their optional edges present are addressable as name+"+edge".
Graph named(std::string_view name);

} // namespace chibound

#endif
