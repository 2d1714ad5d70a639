#ifndef ODDCYCLE_PARTITION_HPP
#define ODDCYCLE_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

struct PartitionParams {
    int delta = 4;           // cluster-diameter budget; must be >= 4 and divisible by 4
    std::uint64_t seed = 0;  // pins permutation and radius
};

// Random low-diameter partition: draw a uniform permutation of V and a
// uniform radius R in [delta/4, delta/2], then assign each vertex to the
// earliest permutation vertex whose radius-R ball contains it. Every cluster
// sits inside a ball of radius R around its center, so cluster diameter is
// at most delta, and every cross edge has an endpoint at distance exactly R
// from its center (a guard).
struct Partition {
    PartitionParams params;
    int radius = 0;                       // the sampled R
    std::vector<std::int32_t> assignment; // per vertex: dense cluster index
    std::vector<Vertex> centers;          // per cluster, in permutation (scoop) order
    std::vector<int> dist_to_center;      // d_G(center of cluster, vertex), <= R
    std::vector<Vertex> permutation;      // the sampled ordering of V

    std::size_t cluster_count() const { return centers.size(); }
};

// Draws (permutation, R) from the seeded generator and builds the partition.
// Deterministic given (g, params). Throws InvalidDelta for a bad delta and
// bad_param for an empty graph.
Partition sample_partition(const Graph& g, const PartitionParams& params);

// Deterministic core: the partition induced by a fixed permutation and
// radius. Runs R rounds of frontier relaxation, so each vertex ends with the
// earliest-permutation center within distance R of it; O(R (n+m)).
Partition partition_with(const Graph& g, std::vector<Vertex> permutation, int radius);

// Test oracle for partition_with: evaluates the defining rule directly with
// one distance-bounded BFS per vertex. O(n (n+m)).
std::vector<std::pair<Vertex, int>> definitional_assignment(const Graph& g,
                                                            const std::vector<Vertex>& permutation,
                                                            int radius);

// Vertices at distance exactly R from their cluster center. Removing them
// disconnects distinct clusters from each other.
VertexSet guards(const Partition& p);

// Edges whose endpoints lie in different clusters.
std::vector<Edge> cross_edges(const Graph& g, const Partition& p);

// Exact rational arithmetic for the exhaustive oracle below.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// Exact Pr[x is a guard] per vertex, by enumerating all n! permutations and
// all delta/4 + 1 radii. Requires n <= 8 (TooLarge otherwise).
std::vector<Rational> guard_probability_oracle(const Graph& g, int delta);

// The analytic expected-guard-count bound (4n/delta) ln(4n/delta) for
// connected graphs. Negative (flagged meaningless) when n < delta/4.
double guard_expectation_bound(std::int64_t n, int delta);

}  // namespace oddcycle

#endif
