#ifndef ODDCYCLE_BIPARTIZE_HPP
#define ODDCYCLE_BIPARTIZE_HPP

#include <cstdint>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/partition.hpp"

namespace oddcycle {

// Parameters implied by k for the vertex-deletion bipartization: a graph
// whose odd cycles all have length > 2k+1 loses all odd cycles once the
// guards of a delta = 4*floor(k/2) partition are removed, and the expected
// number of guards is at most bound.
struct RemovalBounds {
    int k = 0;
    int gamma = 0;       // floor(k/2)
    int delta = 0;       // 4 * gamma
    double bound = 0.0;  // (n/gamma) ln(n/gamma)
};

RemovalBounds removal_bound(std::int64_t n, int k);

struct BipartizeOptions {
    std::uint64_t seed = 0;
    int max_attempts = 64;      // resampling cap; the bound holds in expectation only
    bool verify_girth = false;  // run the odd-girth oracle up front (superlinear)
};

struct BipartizationResult {
    VertexSet removed;                 // X = guards of partition_used
    std::vector<std::int8_t> coloring; // side 0/1 on V \ X, -1 on X
    Partition partition_used;
    int attempts = 0;
    bool cap_exceeded = false;  // no attempt met the target; best attempt returned
    RemovalBounds bounds;
    double target = 0.0;        // |X| accepted when <= ceil(target)
};

// Guard-removal bipartization: sample the partition, remove its guards,
// certify the rest bipartite, and resample until |X| <= ceil(target) or the
// attempt cap is hit. Throws KTooSmall for k < 2 and GirthViolation (with a
// simple odd cycle of length <= 2k+1) when the input provably has a short
// odd cycle.
BipartizationResult bipartize(const Graph& g, int k, const BipartizeOptions& opts = {});

// Same, with an explicit acceptance target for |X|.
BipartizationResult bipartize_with_target(const Graph& g, int k, double target,
                                          const BipartizeOptions& opts = {});

// Fractional form: all odd cycles longer than eps*n. Requires eps*n >= 40
// (EpsTooSmall otherwise); delegates to bipartize with k = floor((eps*n-1)/2)
// and target (5/eps) ln(5/eps).
BipartizationResult bipartize_by_fraction(const Graph& g, double eps,
                                          const BipartizeOptions& opts = {});

}  // namespace oddcycle

#endif
