#ifndef ODDCYCLE_ODD_CYCLE_HPP
#define ODDCYCLE_ODD_CYCLE_HPP

#include <optional>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// Length of the shortest odd cycle; nullopt means infinite (bipartite).
using OddGirth = std::optional<int>;

// Exact odd girth via BFS on the bipartite double cover: for each vertex v,
// dist((v,0),(v,1)) is the shortest odd closed walk through v, and the
// minimum over v is realized by a simple odd cycle. O(n(n+m)).
OddGirth odd_girth(const Graph& g);

// A simple odd cycle of length odd_girth(g), as a closed walk
// v_0,...,v_L = v_0; absent when bipartite. Ties broken by the smallest
// vertex the double-cover search hits first.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

// Splits a closed odd walk at a repeated vertex and keeps the odd part,
// repeating until simple. The result is a simple odd cycle of length at most
// the input's. Throws bad_param if the walk is not closed, not odd, or not a
// walk in g.
std::vector<Vertex> reduce_to_simple_odd_cycle(const Graph& g, std::vector<Vertex> walk);

// Ground-truth oracle: enumerates simple cycles by DFS from each cycle's
// minimum vertex. Requires n <= 12 (TooLarge otherwise).
OddGirth brute_force_odd_girth(const Graph& g);

// Ground-truth oracle: exact maximum independent set by branch and bound
// over bitmasks. Requires n <= 24 (TooLarge otherwise).
VertexSet brute_force_max_independent_set(const Graph& g);

}  // namespace oddcycle

#endif
