#ifndef ODDCYCLE_GRAPH_HPP
#define ODDCYCLE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oddcycle/errors.hpp"

namespace oddcycle {

// Immutable undirected simple graph over vertex ids 0..n-1. Neighbor lists
// are sorted ascending and stored in one adjacency array; all tie-breaking in
// this repo is by ascending vertex id. Safe to share across threads once
// built.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes: throws on self-loops, duplicate edges and
    // endpoints outside [0, n). Either endpoint order is accepted.
    static Graph from_edge_list(Vertex n, const std::vector<Edge>& edges);

    Vertex vertex_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    // Canonical edge list: u < v, sorted lexicographically.
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::int64_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> offsets_{0};
    std::vector<Vertex> adj_;
};

// Set of vertex ids within a universe [0, n). Members are kept sorted and
// unique.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(Vertex universe, std::vector<Vertex> members);

    Vertex universe() const { return universe_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    std::span<const Vertex> members() const { return members_; }

    bool operator==(const VertexSet&) const = default;

private:
    Vertex universe_ = 0;
    std::vector<Vertex> members_;
};

struct LayerDecomposition {
    // Sentinel for unreachable vertices; kept explicit so distance arithmetic
    // on unreachable entries cannot pass silently.
    static constexpr int kUnreachable = -1;

    Vertex source = 0;
    std::vector<int> dist;                    // per vertex, kUnreachable if not reached
    std::vector<Vertex> parent;               // BFS tree parent, -1 for source/unreached
    std::vector<std::vector<Vertex>> layers;  // layers[i] = vertices at distance i, ascending

    bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

LayerDecomposition bfs_layers(const Graph& g, Vertex source);

struct BipartiteResult {
    // Present iff the graph is bipartite; side[v] in {0,1}, every edge
    // bichromatic.
    std::optional<std::vector<std::uint8_t>> coloring;
    // Non-empty iff not bipartite: a closed walk v_0,...,v_L = v_0 of odd
    // length L with consecutive vertices adjacent.
    std::vector<Vertex> odd_walk;

    bool ok() const { return coloring.has_value(); }
};

BipartiteResult is_bipartite(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

struct IndependenceCheck {
    bool independent = true;
    Edge violation{-1, -1};  // canonical (u < v) witness when not independent
};

IndependenceCheck is_independent_set(const Graph& g, const VertexSet& s);

}  // namespace oddcycle

#endif
