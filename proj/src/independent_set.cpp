#include "oddcycle/independent_set.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace oddcycle {

namespace {

// K^e >= n without overflow.
bool pow_at_least(std::int64_t base, int exp, std::int64_t n) {
    std::int64_t acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (acc >= (n + base - 1) / base) return true;  // acc * base >= n
        acc *= base;
    }
    return acc >= n;
}

}  // namespace

int k_root_ceil(std::int64_t n, int k) {
    if (n < 1 || k < 1) throw Error(Errc::bad_param, "k_root_ceil requires n >= 1 and k >= 1");
    std::int64_t lo = 1, hi = n;  // K = n always satisfies K^(k+1) >= n
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid, k + 1, n))
            hi = mid;
        else
            lo = mid + 1;
    }
    return static_cast<int>(lo);
}

std::int64_t independent_set_size_guarantee(std::int64_t n, int k) {
    const std::int64_t K = k_root_ceil(n, k);
    return (n + K + 1) / (K + 2);
}

HarvestResult layered_greedy_independent_set(const Graph& g, int k) {
    if (k < 1) throw Error(Errc::bad_param, "k must be >= 1, got " + std::to_string(k));
    const Vertex n = g.vertex_count();
    HarvestResult result;
    result.trace.K = 1;
    if (n == 0) {
        result.set = VertexSet(0, {});
        return result;
    }
    const int K = k_root_ceil(n, k);
    result.trace.K = K;

    std::vector<bool> alive(n, true);
    std::vector<int> seen_round(n, -1);
    std::vector<int> depth(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> reached;  // all vertices of the current BFS, in layer order
    std::vector<Vertex> output;

    int round_id = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (!alive[root]) continue;

        reached.clear();
        reached.push_back(root);
        seen_round[root] = round_id;
        depth[root] = 0;
        parent[root] = -1;

        std::vector<std::int64_t> sizes{1};
        std::size_t layer_begin = 0, layer_end = 1;
        std::size_t prev_begin = 0, prev_end = 1;
        int j = 0;
        for (;;) {
            ++j;
            const std::size_t next_begin = reached.size();
            for (std::size_t i = layer_begin; i < layer_end; ++i) {
                const Vertex u = reached[i];
                for (Vertex w : g.neighbors(u)) {
                    if (alive[w] && seen_round[w] != round_id) {
                        seen_round[w] = round_id;
                        depth[w] = j;
                        parent[w] = u;
                        reached.push_back(w);
                    }
                }
            }
            const std::int64_t dj = static_cast<std::int64_t>(reached.size() - next_begin);
            sizes.push_back(dj);
            if (dj <= K * sizes[static_cast<std::size_t>(j) - 1]) {
                prev_begin = layer_begin;
                prev_end = layer_end;
                break;
            }
            layer_begin = next_begin;
            layer_end = reached.size();
        }

        // Harvest L_{j-1}; an edge inside it certifies a short odd closed
        // walk through the root.
        for (std::size_t i = prev_begin; i < prev_end; ++i) {
            const Vertex u = reached[i];
            for (Vertex w : g.neighbors(u)) {
                if (alive[w] && seen_round[w] == round_id && depth[w] == j - 1) {
                    std::vector<Vertex> up;
                    for (Vertex x = u; x != -1; x = parent[x]) up.push_back(x);
                    std::vector<Vertex> walk(up.rbegin(), up.rend());
                    for (Vertex x = w; x != -1; x = parent[x]) walk.push_back(x);
                    throw IndependenceViolation(
                        {std::min(u, w), std::max(u, w)}, walk,
                        "harvested layer contains edge (" + std::to_string(u) + "," +
                            std::to_string(w) + "): an odd closed walk of length " +
                            std::to_string(2 * (j - 1) + 1) +
                            " <= 2k+1 exists, so the odd-girth precondition fails");
                }
            }
        }

        HarvestRound round;
        round.root = root;
        round.harvested_layer = j - 1;
        round.layer_sizes = std::move(sizes);
        round.harvested.assign(reached.begin() + static_cast<std::ptrdiff_t>(prev_begin),
                               reached.begin() + static_cast<std::ptrdiff_t>(prev_end));
        std::sort(round.harvested.begin(), round.harvested.end());
        round.deleted = static_cast<std::int64_t>(reached.size());

        output.insert(output.end(), round.harvested.begin(), round.harvested.end());
        for (Vertex v : reached) alive[v] = false;
        result.trace.rounds.push_back(std::move(round));
        ++round_id;
    }

    result.set = VertexSet(n, std::move(output));
    return result;
}

}  // namespace oddcycle
