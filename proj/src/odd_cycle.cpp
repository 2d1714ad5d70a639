#include "oddcycle/odd_cycle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

namespace oddcycle {

namespace {

// BFS over the bipartite double cover from (source, 0). State (v, p) is
// encoded as 2v + p; an edge (u,v) of g connects (u,p) with (v,1-p).
// Expansion is capped at depth_limit. Returns dist; fills parent if given.
std::vector<int> double_cover_bfs(const Graph& g, Vertex source, int depth_limit,
                                  std::vector<std::int32_t>* parent) {
    const std::size_t states = static_cast<std::size_t>(g.vertex_count()) * 2;
    std::vector<int> dist(states, -1);
    if (parent) parent->assign(states, -1);
    std::queue<std::int32_t> q;
    const std::int32_t start = 2 * source;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        std::int32_t s = q.front();
        q.pop();
        const int d = dist[s];
        if (d >= depth_limit) continue;
        const Vertex u = s >> 1;
        const std::int32_t flip = (s & 1) ^ 1;
        for (Vertex w : g.neighbors(u)) {
            std::int32_t t = 2 * w + flip;
            if (dist[t] == -1) {
                dist[t] = d + 1;
                if (parent) (*parent)[t] = s;
                q.push(t);
            }
        }
    }
    return dist;
}

bool adjacent(const Graph& g, Vertex u, Vertex v) {
    auto nb = g.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace

OddGirth odd_girth(const Graph& g) {
    const Vertex n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < n && best > 3; ++v) {
        auto dist = double_cover_bfs(g, v, best - 1, nullptr);
        int d = dist[static_cast<std::size_t>(2 * v) + 1];
        if (d != -1 && d < best) best = d;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
    const Vertex n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    Vertex best_v = -1;
    for (Vertex v = 0; v < n && best > 3; ++v) {
        auto dist = double_cover_bfs(g, v, best - 1, nullptr);
        int d = dist[static_cast<std::size_t>(2 * v) + 1];
        if (d != -1 && d < best) {
            best = d;
            best_v = v;
        }
    }
    if (best_v == -1) return std::nullopt;

    std::vector<std::int32_t> parent;
    double_cover_bfs(g, best_v, best, &parent);
    std::vector<Vertex> walk;
    for (std::int32_t s = 2 * best_v + 1; s != -1; s = parent[s]) walk.push_back(s >> 1);
    return reduce_to_simple_odd_cycle(g, std::move(walk));
}

std::vector<Vertex> reduce_to_simple_odd_cycle(const Graph& g, std::vector<Vertex> walk) {
    auto check = [&](const std::vector<Vertex>& w) {
        if (w.size() < 4 || w.front() != w.back())
            throw Error(Errc::bad_param, "witness is not a closed walk of length >= 3");
        if ((w.size() - 1) % 2 == 0)
            throw Error(Errc::bad_param, "witness walk has even length");
        for (Vertex v : w)
            if (!g.has_vertex(v)) throw Error(Errc::endpoint_out_of_range, "walk vertex out of range");
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!adjacent(g, w[i], w[i + 1]))
                throw Error(Errc::bad_param, "witness walk uses a non-edge");
    };
    check(walk);

    // Odd closed walks are hereditary: splitting at a repeated vertex yields
    // two closed walks of which exactly one is odd. Iterate until simple.
    std::vector<std::int32_t> seen_at(g.vertex_count(), -1);
    for (;;) {
        const std::size_t len = walk.size() - 1;
        std::size_t rep_i = 0, rep_j = 0;
        bool found = false;
        for (std::size_t i = 0; i < len && !found; ++i) {
            std::int32_t prev = seen_at[walk[i]];
            if (prev != -1) {
                rep_i = static_cast<std::size_t>(prev);
                rep_j = i;
                found = true;
            } else {
                seen_at[walk[i]] = static_cast<std::int32_t>(i);
            }
        }
        for (std::size_t i = 0; i < len; ++i) seen_at[walk[i]] = -1;
        if (!found) return walk;

        std::vector<Vertex> inner(walk.begin() + rep_i, walk.begin() + rep_j + 1);
        if ((inner.size() - 1) % 2 == 1) {
            walk = std::move(inner);
        } else {
            std::vector<Vertex> outer(walk.begin(), walk.begin() + rep_i + 1);
            outer.insert(outer.end(), walk.begin() + rep_j + 1, walk.end());
            walk = std::move(outer);
        }
    }
}

OddGirth brute_force_odd_girth(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n > 12)
        throw Error(Errc::too_large, "brute_force_odd_girth requires n <= 12, got n=" +
                                         std::to_string(n));
    int best = std::numeric_limits<int>::max();
    std::vector<bool> on_path(n, false);

    // Paths anchored at each cycle's minimum vertex s; only vertices > s are
    // explored, so every simple cycle is enumerated exactly once up to
    // direction.
    auto dfs = [&](auto&& self, Vertex s, Vertex u, int len) -> void {
        for (Vertex w : g.neighbors(u)) {
            if (w == s && len >= 2) {
                int cycle = len + 1;
                if (cycle % 2 == 1) best = std::min(best, cycle);
            } else if (w > s && !on_path[w] && len + 2 < best) {
                on_path[w] = true;
                self(self, s, w, len + 1);
                on_path[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n && best > 3; ++s) {
        on_path[s] = true;
        dfs(dfs, s, s, 0);
        on_path[s] = false;
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

VertexSet brute_force_max_independent_set(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n > 24)
        throw Error(Errc::too_large,
                    "brute_force_max_independent_set requires n <= 24, got n=" +
                        std::to_string(n));
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    std::uint32_t best_mask = 0;
    int best_size = -1;

    auto rec = [&](auto&& self, std::uint32_t avail, std::uint32_t cur, int size) -> void {
        if (size + std::popcount(avail) <= best_size) return;
        if (avail == 0) {
            best_size = size;
            best_mask = cur;
            return;
        }
        // Pivot on the max-degree vertex of the remaining graph (smallest id
        // on ties).
        Vertex pivot = -1;
        int pivot_deg = -1;
        for (std::uint32_t m = avail; m != 0; m &= m - 1) {
            Vertex v = static_cast<Vertex>(std::countr_zero(m));
            int deg = std::popcount(adj[v] & avail);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        if (pivot_deg <= 1) {
            // Remaining graph is a matching plus isolated vertices: take every
            // vertex, dropping the larger endpoint of each edge.
            std::uint32_t take = avail;
            for (std::uint32_t m = avail; m != 0; m &= m - 1) {
                Vertex v = static_cast<Vertex>(std::countr_zero(m));
                if (take & (1u << v)) take &= ~(adj[v] & take);
            }
            int total = size + std::popcount(take);
            if (total > best_size) {
                best_size = total;
                best_mask = cur | take;
            }
            return;
        }
        std::uint32_t bit = 1u << pivot;
        self(self, avail & ~(bit | adj[pivot]), cur | bit, size + 1);
        self(self, avail & ~bit, cur, size);
    };
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    rec(rec, full, 0, 0);

    std::vector<Vertex> members;
    for (std::uint32_t m = best_mask; m != 0; m &= m - 1)
        members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return VertexSet(n, std::move(members));
}

}  // namespace oddcycle
