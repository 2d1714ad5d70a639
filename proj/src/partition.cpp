#include "oddcycle/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "oddcycle/rng.hpp"

namespace oddcycle {

namespace {

void validate_delta(int delta) {
    if (delta < 4 || delta % 4 != 0)
        throw Error(Errc::invalid_delta,
                    "delta must be >= 4 and divisible by 4, got " + std::to_string(delta));
}

std::vector<std::int32_t> permutation_ranks(const Graph& g, const std::vector<Vertex>& perm) {
    const Vertex n = g.vertex_count();
    if (static_cast<Vertex>(perm.size()) != n)
        throw Error(Errc::bad_param, "permutation size mismatch");
    std::vector<std::int32_t> pos(n, -1);
    for (std::int32_t i = 0; i < n; ++i) {
        Vertex v = perm[static_cast<std::size_t>(i)];
        if (!g.has_vertex(v) || pos[v] != -1)
            throw Error(Errc::bad_param, "not a permutation of the vertex set");
        pos[v] = i;
    }
    return pos;
}

}  // namespace

Partition partition_with(const Graph& g, std::vector<Vertex> permutation, int radius) {
    if (radius < 1) throw Error(Errc::bad_param, "radius must be positive");
    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> pos = permutation_ranks(g, permutation);

    // best[v] after round d holds the smallest permutation rank within
    // distance d of v; dist[v] the round its final value arrived, i.e. the
    // distance to the winning center. Worklist entries carry the rank as of
    // the previous round so one round never chains two hops.
    std::vector<std::int32_t> best(pos);
    std::vector<int> dist(n, 0);
    std::vector<std::pair<Vertex, std::int32_t>> work;
    work.reserve(n);
    for (Vertex v = 0; v < n; ++v) work.emplace_back(v, pos[v]);

    std::vector<int> changed_at(n, -1);
    std::vector<Vertex> touched;
    for (int d = 1; d <= radius && !work.empty(); ++d) {
        touched.clear();
        for (const auto& [u, rank] : work) {
            for (Vertex w : g.neighbors(u)) {
                if (rank < best[w]) {
                    if (changed_at[w] != d) {
                        changed_at[w] = d;
                        touched.push_back(w);
                    }
                    best[w] = rank;
                    dist[w] = d;
                }
            }
        }
        work.clear();
        for (Vertex w : touched) work.emplace_back(w, best[w]);
    }

    // Dense cluster ids in scoop (permutation rank) order.
    std::vector<std::int32_t> winning_ranks(best);
    std::sort(winning_ranks.begin(), winning_ranks.end());
    winning_ranks.erase(std::unique(winning_ranks.begin(), winning_ranks.end()),
                        winning_ranks.end());

    Partition p;
    p.radius = radius;
    p.permutation = std::move(permutation);
    p.dist_to_center = std::move(dist);
    p.centers.reserve(winning_ranks.size());
    for (std::int32_t r : winning_ranks)
        p.centers.push_back(p.permutation[static_cast<std::size_t>(r)]);
    p.assignment.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        auto it = std::lower_bound(winning_ranks.begin(), winning_ranks.end(), best[v]);
        p.assignment[v] = static_cast<std::int32_t>(it - winning_ranks.begin());
    }
    return p;
}

Partition sample_partition(const Graph& g, const PartitionParams& params) {
    validate_delta(params.delta);
    if (g.vertex_count() == 0) throw Error(Errc::bad_param, "cannot partition the empty graph");

    Rng rng(params.seed);
    std::vector<Vertex> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const int radius =
        params.delta / 4 + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.delta / 4) + 1));

    Partition p = partition_with(g, std::move(perm), radius);
    p.params = params;
    return p;
}

std::vector<std::pair<Vertex, int>> definitional_assignment(const Graph& g,
                                                            const std::vector<Vertex>& permutation,
                                                            int radius) {
    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> pos = permutation_ranks(g, permutation);

    std::vector<int> dist(n);
    std::vector<Vertex> queue(static_cast<std::size_t>(n));
    std::vector<int> stamp(n, -1);
    std::vector<std::pair<Vertex, int>> out(n, {-1, -1});
    for (Vertex x = 0; x < n; ++x) {
        std::size_t head = 0, tail = 0;
        queue[tail++] = x;
        stamp[x] = x;
        dist[x] = 0;
        Vertex center = x;
        int center_dist = 0;
        while (head < tail) {
            Vertex u = queue[head++];
            if (pos[u] < pos[center]) {
                center = u;
                center_dist = dist[u];
            }
            if (dist[u] == radius) continue;
            for (Vertex w : g.neighbors(u)) {
                if (stamp[w] != x) {
                    stamp[w] = x;
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        out[x] = {center, center_dist};
    }
    return out;
}

VertexSet guards(const Partition& p) {
    std::vector<Vertex> members;
    const Vertex n = static_cast<Vertex>(p.dist_to_center.size());
    for (Vertex v = 0; v < n; ++v)
        if (p.dist_to_center[v] == p.radius) members.push_back(v);
    return VertexSet(n, std::move(members));
}

std::vector<Edge> cross_edges(const Graph& g, const Partition& p) {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (p.assignment[e.first] != p.assignment[e.second]) out.push_back(e);
    return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(Errc::bad_param, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

std::vector<Rational> guard_probability_oracle(const Graph& g, int delta) {
    validate_delta(delta);
    const Vertex n = g.vertex_count();
    if (n > 8)
        throw Error(Errc::too_large,
                    "guard_probability_oracle requires n <= 8, got n=" + std::to_string(n));
    if (n == 0) return {};

    // All-pairs distances.
    std::vector<std::vector<int>> d(n);
    for (Vertex v = 0; v < n; ++v) d[v] = bfs_layers(g, v).dist;

    std::vector<std::int64_t> hits(n, 0);
    std::int64_t outcomes = 0;

    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int r = delta / 4; r <= delta / 2; ++r) {
            ++outcomes;
            for (Vertex x = 0; x < n; ++x) {
                for (Vertex y : perm) {
                    int dy = d[y][x];
                    if (dy != LayerDecomposition::kUnreachable && dy <= r) {
                        if (dy == r) ++hits[x];
                        break;
                    }
                }
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Rational> out;
    out.reserve(n);
    for (Vertex x = 0; x < n; ++x) out.push_back(make_rational(hits[x], outcomes));
    return out;
}

double guard_expectation_bound(std::int64_t n, int delta) {
    const double ratio = 4.0 * static_cast<double>(n) / static_cast<double>(delta);
    return ratio * std::log(ratio);
}

}  // namespace oddcycle
