#ifndef ODDCYCLE_TEST_UTIL_HPP
#define ODDCYCLE_TEST_UTIL_HPP

#include <set>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/rng.hpp"

namespace oddcycle::test {

// Uniform-ish G(n, m): m distinct edges by rejection. Small n only.
inline Graph gnm_random_graph(Vertex n, std::int64_t m, std::uint64_t seed) {
    Rng rng(seed);
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m > max_edges) m = max_edges;
    std::set<Edge> picked;
    while (static_cast<std::int64_t>(picked.size()) < m) {
        Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        picked.insert({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edge_list(n, {picked.begin(), picked.end()});
}

// Random graph where each pair appears independently with probability p.
inline Graph gnp_random_graph(Vertex n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() <= p) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph petersen() {
    return Graph::from_edge_list(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},       // outer C5
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},       // inner pentagram
             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});     // spokes
}

inline Graph triangle() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace oddcycle::test

#endif
