#include "oddcycle/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace oddcycle {

Graph Graph::from_edge_list(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw Error(Errc::bad_param, "vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error(Errc::endpoint_out_of_range,
                        "edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range for n=" + std::to_string(n));
        if (a == b)
            throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(a));
        g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw Error(Errc::duplicate_edge, "duplicate edge (" + std::to_string(dup->first) + "," +
                                              std::to_string(dup->second) + ")");

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : g.edges_) {
        ++deg[static_cast<std::size_t>(u) + 1];
        ++deg[static_cast<std::size_t>(v) + 1];
    }
    g.offsets_.assign(deg.begin(), deg.end());
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.adj_.resize(static_cast<std::size_t>(2) * g.edges_.size());
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
        g.adj_[static_cast<std::size_t>(cursor[u]++)] = v;
        g.adj_[static_cast<std::size_t>(cursor[v]++)] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
    }
    return g;
}

VertexSet::VertexSet(Vertex universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
    for (Vertex v : members_)
        if (v < 0 || v >= universe_)
            throw Error(Errc::endpoint_out_of_range,
                        "vertex " + std::to_string(v) + " outside universe [0," +
                            std::to_string(universe_) + ")");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

LayerDecomposition bfs_layers(const Graph& g, Vertex source) {
    if (!g.has_vertex(source))
        throw Error(Errc::endpoint_out_of_range, "BFS source " + std::to_string(source) +
                                                     " out of range");
    const Vertex n = g.vertex_count();
    LayerDecomposition out;
    out.source = source;
    out.dist.assign(n, LayerDecomposition::kUnreachable);
    out.parent.assign(n, -1);

    std::queue<Vertex> q;
    out.dist[source] = 0;
    q.push(source);
    int max_dist = 0;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (out.dist[w] == LayerDecomposition::kUnreachable) {
                out.dist[w] = out.dist[u] + 1;
                out.parent[w] = u;
                max_dist = std::max(max_dist, out.dist[w]);
                q.push(w);
            }
        }
    }
    // Filling layers by ascending vertex id keeps each distance class sorted.
    out.layers.assign(static_cast<std::size_t>(max_dist) + 1, {});
    for (Vertex v = 0; v < n; ++v)
        if (out.dist[v] != LayerDecomposition::kUnreachable)
            out.layers[static_cast<std::size_t>(out.dist[v])].push_back(v);
    return out;
}

BipartiteResult is_bipartite(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::uint8_t> side(n, 0);
    std::vector<int> dist(n, -1);
    std::vector<Vertex> parent(n, -1);

    std::queue<Vertex> q;
    for (Vertex root = 0; root < n; ++root) {
        if (dist[root] != -1) continue;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    side[w] = static_cast<std::uint8_t>(dist[w] & 1);
                    q.push(w);
                }
            }
        }
    }

    for (const auto& [u, v] : g.edges()) {
        if (side[u] != side[v]) continue;
        // Monochromatic edge: stitch the two BFS-tree paths into an odd
        // closed walk root..u, edge uv, v..root.
        std::vector<Vertex> up;
        for (Vertex x = u; x != -1; x = parent[x]) up.push_back(x);
        std::vector<Vertex> walk(up.rbegin(), up.rend());
        for (Vertex x = v; x != -1; x = parent[x]) walk.push_back(x);
        BipartiteResult res;
        res.odd_walk = std::move(walk);
        return res;
    }

    BipartiteResult res;
    res.coloring = std::move(side);
    return res;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t count = 0;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = count;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < n; ++v) members[static_cast<std::size_t>(comp[v])].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(members.size());
    for (auto& m : members) out.emplace_back(n, std::move(m));
    return out;
}

IndependenceCheck is_independent_set(const Graph& g, const VertexSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (Vertex v : s.members()) {
        if (!g.has_vertex(v))
            throw Error(Errc::endpoint_out_of_range, "set member out of range");
        in[v] = true;
    }
    for (Vertex v : s.members()) {
        for (Vertex w : g.neighbors(v)) {
            if (w > v && in[w]) return {false, {v, w}};
        }
    }
    return {};
}

}  // namespace oddcycle
