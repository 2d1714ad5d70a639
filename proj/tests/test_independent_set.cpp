#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oddcycle/generators.hpp"
#include "oddcycle/independent_set.hpp"
#include "oddcycle/odd_cycle.hpp"
#include "test_util.hpp"

using namespace oddcycle;

namespace {

// Trace postconditions: stop rule, growth rule, layer index cap, payment.
void check_trace(const Graph& g, int k, const HarvestResult& r) {
    const std::int64_t K = r.trace.K;
    std::int64_t harvested_total = 0, deleted_total = 0;
    for (const auto& round : r.trace.rounds) {
        const auto& d = round.layer_sizes;
        const int j = static_cast<int>(d.size()) - 1;
        REQUIRE(j >= 1);
        CHECK(round.harvested_layer == j - 1);
        CHECK(round.harvested_layer <= k);
        CHECK(d[0] == 1);
        CHECK(d[static_cast<std::size_t>(j)] <= K * d[static_cast<std::size_t>(j) - 1]);
        for (int l = 1; l <= j - 1; ++l)
            CHECK(d[static_cast<std::size_t>(l)] > K * d[static_cast<std::size_t>(l) - 1]);
        CHECK(static_cast<std::int64_t>(round.harvested.size()) ==
              d[static_cast<std::size_t>(j) - 1]);
        std::int64_t sum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
        CHECK(round.deleted == sum);
        CHECK(round.deleted <= (K + 2) * static_cast<std::int64_t>(round.harvested.size()));
        harvested_total += static_cast<std::int64_t>(round.harvested.size());
        deleted_total += round.deleted;
    }
    CHECK(deleted_total == g.vertex_count());
    CHECK(harvested_total == static_cast<std::int64_t>(r.set.size()));
    CHECK(is_independent_set(g, r.set).independent);
}

}  // namespace

TEST_CASE("k_root_ceil exact values") {
    CHECK(k_root_ceil(5, 1) == 3);
    CHECK(k_root_ceil(1000, 2) == 10);
    CHECK(k_root_ceil(1001, 2) == 11);
    CHECK(k_root_ceil(1, 1) == 1);
    CHECK(k_root_ceil(1000000, 3) == 32);
    CHECK(k_root_ceil(1000000, 1) == 1000);
    CHECK_THROWS_AS(k_root_ceil(0, 1), Error);
    CHECK_THROWS_AS(k_root_ceil(5, 0), Error);
}

TEST_CASE("k_root_ceil is the least integer root") {
    for (std::int64_t n : {1, 2, 7, 63, 64, 65, 10000, 123456789}) {
        for (int k = 1; k <= 6; ++k) {
            const std::int64_t K = k_root_ceil(n, k);
            auto pow_ge = [](std::int64_t b, int e, std::int64_t target) {
                std::int64_t acc = 1;
                for (int i = 0; i < e; ++i) {
                    if (acc > target / b + 1) return true;
                    acc *= b;
                }
                return acc >= target;
            };
            CHECK(pow_ge(K, k + 1, n));
            if (K > 1) CHECK_FALSE(pow_ge(K - 1, k + 1, n));
        }
    }
}

TEST_CASE("size guarantee arithmetic") {
    CHECK(independent_set_size_guarantee(5, 1) == 1);
    CHECK(independent_set_size_guarantee(1000000, 1) == 999);   // ceil(1e6/1002)
    CHECK(independent_set_size_guarantee(1000000, 3) == 29412); // K=32, ceil(1e6/34)
    CHECK(independent_set_size_guarantee(1000, 1) == 30);       // K=32, ceil(1000/34)
}

TEST_CASE("C5 with k=1: the hand-run trace") {
    Graph c5 = gen_cycle(5);
    auto r = layered_greedy_independent_set(c5, 1);
    CHECK(r.trace.K == 3);
    REQUIRE(r.trace.rounds.size() == 2);

    const auto& r1 = r.trace.rounds[0];
    CHECK(r1.root == 0);
    CHECK(r1.layer_sizes == std::vector<std::int64_t>{1, 2});
    CHECK(r1.harvested == std::vector<Vertex>{0});
    CHECK(r1.deleted == 3);  // {0,1,4}

    const auto& r2 = r.trace.rounds[1];
    CHECK(r2.root == 2);
    CHECK(r2.layer_sizes == std::vector<std::int64_t>{1, 1});
    CHECK(r2.harvested == std::vector<Vertex>{2});
    CHECK(r2.deleted == 2);  // {2,3}

    CHECK(std::vector<Vertex>(r.set.members().begin(), r.set.members().end()) ==
          std::vector<Vertex>{0, 2});
    CHECK(static_cast<std::int64_t>(r.set.size()) >= independent_set_size_guarantee(5, 1));
    check_trace(c5, 1, r);
}

TEST_CASE("empty graph on 10 vertices harvests everything") {
    Graph g = Graph::from_edge_list(10, {});
    auto r = layered_greedy_independent_set(g, 1);
    CHECK(r.set.size() == 10);
    CHECK(r.trace.rounds.size() == 10);
    check_trace(g, 1, r);
}

TEST_CASE("triangle with k=1 harvests the root despite the girth breach") {
    auto r = layered_greedy_independent_set(test::triangle(), 1);
    CHECK(r.trace.K == 2);
    REQUIRE(r.trace.rounds.size() == 1);
    CHECK(r.trace.rounds[0].harvested == std::vector<Vertex>{0});
    CHECK(r.trace.rounds[0].deleted == 3);
    CHECK(std::vector<Vertex>(r.set.members().begin(), r.set.members().end()) ==
          std::vector<Vertex>{0});
}

TEST_CASE("a harvested layer with an edge raises IndependenceViolation") {
    // Star on 0 with leaves 1..6 plus the edge (1,2): d_1 = 6 > K=3 forces
    // harvesting L_1, which contains an edge.
    Graph g = Graph::from_edge_list(
        7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}});
    try {
        layered_greedy_independent_set(g, 1);
        FAIL("expected IndependenceViolation");
    } catch (const IndependenceViolation& e) {
        CHECK(e.violating_edge() == Edge{1, 2});
        const auto& w = e.implied_walk();
        REQUIRE(w.size() >= 4);
        CHECK(w.front() == w.back());
        CHECK((w.size() - 1) % 2 == 1);
        CHECK(w.size() - 1 <= 2 * 1 + 1);
    }
}

TEST_CASE("guarantee holds on girth-certified families") {
    struct Case {
        Graph g;
        int k;
    };
    std::vector<Case> cases;
    cases.push_back({gen_cycle_blowup(5, 3), 1});
    cases.push_back({gen_cycle_blowup(7, 2), 2});
    cases.push_back({gen_cycle_blowup(9, 4), 3});
    cases.push_back({gen_subdivision(test::gnm_random_graph(10, 20, 2), 2), 4});
    cases.push_back({gen_complete_bipartite(6, 9), 5});
    cases.push_back({gen_random_bipartite(30, 30, 0.1, 9), 3});
    cases.push_back({gen_cycle(21), 2});
    for (const auto& [g, k] : cases) {
        auto og = odd_girth(g);
        REQUIRE((!og || *og > 2 * k + 1));
        auto r = layered_greedy_independent_set(g, k);
        check_trace(g, k, r);
        CHECK(static_cast<std::int64_t>(r.set.size()) >=
              independent_set_size_guarantee(g.vertex_count(), k));
    }
}

TEST_CASE("output never exceeds the optimum on small graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = gen_random_bipartite(8, 8, 0.15, seed);
        auto r = layered_greedy_independent_set(g, 2);
        auto best = brute_force_max_independent_set(g);
        CHECK(r.set.size() <= best.size());
        CHECK(static_cast<std::int64_t>(r.set.size()) >=
              independent_set_size_guarantee(g.vertex_count(), 2));
    }
}

TEST_CASE("deterministic output") {
    Graph g = gen_cycle_blowup(5, 10);
    auto a = layered_greedy_independent_set(g, 1);
    auto b = layered_greedy_independent_set(g, 1);
    CHECK(a.set == b.set);
    CHECK(a.trace.rounds.size() == b.trace.rounds.size());
}

TEST_CASE("k below 1 is rejected") {
    CHECK_THROWS_AS(layered_greedy_independent_set(gen_cycle(5), 0), Error);
}
