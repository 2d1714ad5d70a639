#include "oddcycle/generators.hpp"

#include <cmath>
#include <string>

#include "oddcycle/rng.hpp"

namespace oddcycle {

Graph gen_cycle(Vertex len) {
    if (len < 3) throw Error(Errc::bad_param, "cycle length must be >= 3, got " + std::to_string(len));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(len));
    for (Vertex i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
    return Graph::from_edge_list(len, edges);
}

Graph gen_path(Vertex n) {
    if (n < 1) throw Error(Errc::bad_param, "path needs >= 1 vertex");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph gen_complete_bipartite(Vertex n1, Vertex n2) {
    if (n1 < 0 || n2 < 0) throw Error(Errc::bad_param, "side sizes must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
    for (Vertex a = 0; a < n1; ++a)
        for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
    return Graph::from_edge_list(n1 + n2, edges);
}

Graph gen_cycle_blowup(Vertex len, Vertex class_size) {
    if (len < 3 || len % 2 == 0)
        throw Error(Errc::bad_param, "blowup length must be odd and >= 3, got " + std::to_string(len));
    if (class_size < 1) throw Error(Errc::bad_param, "class size must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(len) * class_size * class_size);
    for (Vertex v = 0; v < len; ++v) {
        const Vertex w = (v + 1) % len;
        for (Vertex a = 0; a < class_size; ++a)
            for (Vertex b = 0; b < class_size; ++b)
                edges.emplace_back(v * class_size + a, w * class_size + b);
    }
    return Graph::from_edge_list(len * class_size, edges);
}

Graph gen_subdivision(const Graph& g, int t) {
    if (t < 0) throw Error(Errc::bad_param, "subdivision parameter must be >= 0");
    if (t == 0) return g;
    const Vertex n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * (2 * t + 1));
    Vertex next = n;
    for (const auto& [u, v] : g.edges()) {
        Vertex prev = u;
        for (int i = 0; i < 2 * t; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph::from_edge_list(next, edges);
}

Graph gen_random_bipartite(Vertex n1, Vertex n2, double p, std::uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw Error(Errc::bad_param, "side sizes must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(Errc::bad_param, "edge probability must lie in [0,1]");
    const std::int64_t pairs = static_cast<std::int64_t>(n1) * n2;
    std::vector<Edge> edges;
    if (p >= 1.0) {
        return gen_complete_bipartite(n1, n2);
    }
    if (p > 0.0 && pairs > 0) {
        Rng rng(seed);
        const double log1mp = std::log1p(-p);
        std::int64_t idx = -1;
        for (;;) {
            const double gap = std::floor(std::log(rng.uniform01()) / log1mp);
            if (gap > static_cast<double>(pairs)) break;
            idx += 1 + static_cast<std::int64_t>(gap);
            if (idx >= pairs) break;
            const Vertex a = static_cast<Vertex>(idx / n2);
            const Vertex b = static_cast<Vertex>(idx % n2);
            edges.emplace_back(a, n1 + b);
        }
    }
    return Graph::from_edge_list(n1 + n2, edges);
}

}  // namespace oddcycle
