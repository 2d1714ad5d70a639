#include "oddcycle/bipartize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oddcycle/odd_cycle.hpp"
#include "oddcycle/rng.hpp"

namespace oddcycle {

namespace {

struct Induced {
    Graph graph;
    std::vector<Vertex> to_new;  // old id -> new id, -1 if removed
    std::vector<Vertex> to_old;  // new id -> old id
};

Induced induce_without(const Graph& g, const VertexSet& removed) {
    Induced out;
    const Vertex n = g.vertex_count();
    out.to_new.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (!removed.contains(v)) {
            out.to_new[v] = static_cast<Vertex>(out.to_old.size());
            out.to_old.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (out.to_new[u] != -1 && out.to_new[v] != -1)
            edges.emplace_back(out.to_new[u], out.to_new[v]);
    out.graph = Graph::from_edge_list(static_cast<Vertex>(out.to_old.size()), edges);
    return out;
}

// An edge between equal-distance vertices of one cluster closes an odd walk
// of length 2t+1 <= 2R+1 <= 2k+1 through the center, which reduces to a
// simple short odd cycle.
std::vector<Vertex> short_odd_cycle_through(const Graph& g, const Partition& p, Edge e) {
    const Vertex center = p.centers[static_cast<std::size_t>(p.assignment[e.first])];
    auto ld = bfs_layers(g, center);
    std::vector<Vertex> up;
    for (Vertex x = e.first; x != -1; x = ld.parent[x]) up.push_back(x);
    std::vector<Vertex> walk(up.rbegin(), up.rend());
    for (Vertex x = e.second; x != -1; x = ld.parent[x]) walk.push_back(x);
    return reduce_to_simple_odd_cycle(g, std::move(walk));
}

}  // namespace

RemovalBounds removal_bound(std::int64_t n, int k) {
    if (k < 2)
        throw Error(Errc::k_too_small,
                    "k must be >= 2 (floor(k/2) would vanish), got " + std::to_string(k));
    if (n < 1) throw Error(Errc::bad_param, "n must be positive");
    RemovalBounds rb;
    rb.k = k;
    rb.gamma = k / 2;
    rb.delta = 4 * rb.gamma;
    const double ratio = static_cast<double>(n) / rb.gamma;
    rb.bound = ratio * std::log(ratio);
    return rb;
}

BipartizationResult bipartize_with_target(const Graph& g, int k, double target,
                                          const BipartizeOptions& opts) {
    const Vertex n = g.vertex_count();
    if (k < 2) throw Error(Errc::k_too_small, "k must be >= 2, got " + std::to_string(k));
    if (n == 0) {
        BipartizationResult res;
        res.bounds.k = k;
        res.bounds.gamma = k / 2;
        res.bounds.delta = 4 * (k / 2);
        res.target = target;
        return res;
    }
    RemovalBounds rb = removal_bound(n, k);

    if (opts.verify_girth) {
        OddGirth og = odd_girth(g);
        if (og && *og <= 2 * k + 1) {
            auto witness = shortest_odd_cycle(g);
            throw GirthViolation(*witness, "odd girth " + std::to_string(*og) +
                                               " <= 2k+1 = " + std::to_string(2 * k + 1));
        }
    }

    const int max_attempts = std::max(opts.max_attempts, 1);
    const double accept = std::ceil(target);

    BipartizationResult best;
    bool have_best = false;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        PartitionParams params{rb.delta, derive_seed(opts.seed, static_cast<std::uint64_t>(attempt - 1))};
        Partition p = sample_partition(g, params);
        VertexSet removed = guards(p);

        // Equal-distance edge inside a cluster between two surviving
        // vertices: the parity coloring fails and the input provably has an
        // odd cycle of length <= 2k+1.
        Edge bad{-1, -1};
        for (const auto& e : g.edges()) {
            if (p.assignment[e.first] == p.assignment[e.second] &&
                p.dist_to_center[e.first] == p.dist_to_center[e.second] &&
                p.dist_to_center[e.first] < p.radius) {
                bad = e;
                break;
            }
        }

        BipartizationResult res;
        res.bounds = rb;
        res.target = target;
        res.attempts = attempt;
        if (bad.first == -1) {
            res.coloring.assign(n, -1);
            for (Vertex v = 0; v < n; ++v)
                if (!removed.contains(v))
                    res.coloring[v] = static_cast<std::int8_t>(p.dist_to_center[v] & 1);
        } else {
            // Precondition already violated; the outcome may still be
            // certifiable, in which case the distance-parity coloring is replaced
            // by a fresh two-coloring of the remainder.
            Induced ind = induce_without(g, removed);
            BipartiteResult check = is_bipartite(ind.graph);
            if (!check.ok())
                throw GirthViolation(short_odd_cycle_through(g, p, bad),
                                     "graph has an odd cycle of length <= 2k+1 = " +
                                         std::to_string(2 * k + 1));
            res.coloring.assign(n, -1);
            for (Vertex v = 0; v < static_cast<Vertex>(ind.to_old.size()); ++v)
                res.coloring[ind.to_old[v]] = static_cast<std::int8_t>((*check.coloring)[v]);
        }
        res.removed = std::move(removed);
        res.partition_used = std::move(p);

        for (const auto& [u, v] : g.edges())
            if (res.coloring[u] != -1 && res.coloring[u] == res.coloring[v])
                throw std::logic_error("bipartization produced an improper coloring");

        if (static_cast<double>(res.removed.size()) <= accept) {
            return res;
        }
        if (!have_best || res.removed.size() < best.removed.size()) {
            best = std::move(res);
            have_best = true;
        }
    }
    best.attempts = max_attempts;
    best.cap_exceeded = true;
    return best;
}

BipartizationResult bipartize(const Graph& g, int k, const BipartizeOptions& opts) {
    if (k < 2) throw Error(Errc::k_too_small, "k must be >= 2, got " + std::to_string(k));
    double target = 0.0;
    if (g.vertex_count() > 0) target = removal_bound(g.vertex_count(), k).bound;
    return bipartize_with_target(g, k, target, opts);
}

BipartizationResult bipartize_by_fraction(const Graph& g, double eps, const BipartizeOptions& opts) {
    const double en = eps * static_cast<double>(g.vertex_count());
    if (en < 40.0)
        throw Error(Errc::eps_too_small,
                    "the fractional form requires eps*n >= 40, got " + std::to_string(en));
    const int k = static_cast<int>(std::floor((en - 1.0) / 2.0));
    const double target = (5.0 / eps) * std::log(5.0 / eps);
    return bipartize_with_target(g, k, target, opts);
}

}  // namespace oddcycle
