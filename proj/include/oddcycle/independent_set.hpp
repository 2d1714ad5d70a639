#ifndef ODDCYCLE_INDEPENDENT_SET_HPP
#define ODDCYCLE_INDEPENDENT_SET_HPP

#include <cstdint>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// Smallest integer K with K^(k+1) >= n, by exact integer binary search.
int k_root_ceil(std::int64_t n, int k);

// ceil(n / (K+2)) with K = k_root_ceil(n, k): the guaranteed output size of
// the harvester on graphs whose odd cycles all exceed 2k+1.
std::int64_t independent_set_size_guarantee(std::int64_t n, int k);

// One harvest round: BFS layers L_0..L_j grown from root until the first j
// with |L_j| <= K |L_{j-1}|; L_{j-1} joins the output, L_0..L_j are deleted.
struct HarvestRound {
    Vertex root = -1;
    int harvested_layer = 0;                  // j-1
    std::vector<std::int64_t> layer_sizes;    // d_0 .. d_j
    std::vector<Vertex> harvested;            // L_{j-1}, ascending
    std::int64_t deleted = 0;                 // |L_0| + ... + |L_j|
};

struct HarvestTrace {
    int K = 1;
    std::vector<HarvestRound> rounds;
};

struct HarvestResult {
    VertexSet set;
    HarvestTrace trace;
};

// The layered greedy harvester. Roots are the smallest surviving vertex id;
// deletion is lazy, so total work is O(n + m). Each harvested layer is
// checked for internal edges; a hit proves an odd closed walk of length
// <= 2k+1 and raises IndependenceViolation. With the odd-girth precondition
// the output has size >= ceil(n / (K+2)).
HarvestResult layered_greedy_independent_set(const Graph& g, int k);

}  // namespace oddcycle

#endif
