#ifndef ODDCYCLE_GENERATORS_HPP
#define ODDCYCLE_GENERATORS_HPP

#include <cstdint>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// C_len: odd girth len when len is odd, infinite when even. len >= 3.
Graph gen_cycle(Vertex len);

// P_n, the path on n vertices (n-1 edges). n >= 1.
Graph gen_path(Vertex n);

// K_{n1,n2}: left side 0..n1-1, right side n1..n1+n2-1.
Graph gen_complete_bipartite(Vertex n1, Vertex n2);

// Each vertex of C_len becomes an independent class of class_size vertices
// (class v occupies ids v*class_size..(v+1)*class_size-1); each cycle edge
// becomes a complete bipartite bundle. Odd girth stays len; m = len *
// class_size^2. len must be odd and >= 3.
Graph gen_cycle_blowup(Vertex len, Vertex class_size);

// Replaces every edge by a path of 2t+1 edges, which multiplies the odd
// girth by 2t+1. The 2t interior vertices of each edge are appended after
// the original ids, in canonical edge order. t = 0 returns g unchanged.
Graph gen_subdivision(const Graph& g, int t);

// Bipartite G(n1, n2, p): every cross pair independently with probability p,
// sampled by geometric skipping so generation is O(n + m) even for small p.
Graph gen_random_bipartite(Vertex n1, Vertex n2, double p, std::uint64_t seed);

}  // namespace oddcycle

#endif
