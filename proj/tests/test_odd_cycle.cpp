#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oddcycle/generators.hpp"
#include "oddcycle/odd_cycle.hpp"
#include "test_util.hpp"

using namespace oddcycle;

namespace {

void check_simple_odd_cycle(const Graph& g, const std::vector<Vertex>& w, int expected_len) {
    REQUIRE(w.size() >= 4);
    CHECK(w.front() == w.back());
    CHECK(static_cast<int>(w.size()) - 1 == expected_len);
    CHECK(expected_len % 2 == 1);
    std::set<Vertex> distinct(w.begin(), w.end() - 1);
    CHECK(distinct.size() == w.size() - 1);  // simple
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto nb = g.neighbors(w[i]);
        CHECK(std::binary_search(nb.begin(), nb.end(), w[i + 1]));
    }
}

}  // namespace

TEST_CASE("odd_girth on known graphs") {
    CHECK(odd_girth(test::triangle()) == 3);
    CHECK(odd_girth(gen_cycle(9)) == 9);
    CHECK(odd_girth(gen_complete_bipartite(3, 3)) == OddGirth{});
    CHECK(odd_girth(Graph::from_edge_list(0, {})) == OddGirth{});
}

TEST_CASE("shortest_odd_cycle on known graphs") {
    auto tri = shortest_odd_cycle(test::triangle());
    REQUIRE(tri.has_value());
    check_simple_odd_cycle(test::triangle(), *tri, 3);
    CHECK(std::set<Vertex>(tri->begin(), tri->end()) == std::set<Vertex>{0, 1, 2});

    CHECK_FALSE(shortest_odd_cycle(gen_cycle(4)).has_value());

    // C5 plus chord (0,2): the chord closes a triangle.
    Graph chord = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    CHECK(brute_force_odd_girth(chord) == 3);
    auto w = shortest_odd_cycle(chord);
    REQUIRE(w.has_value());
    check_simple_odd_cycle(chord, *w, 3);
}

TEST_CASE("brute_force_odd_girth on known graphs") {
    CHECK(brute_force_odd_girth(gen_cycle(7)) == 7);
    CHECK(brute_force_odd_girth(test::petersen()) == 5);
    CHECK(brute_force_odd_girth(gen_cycle(6)) == OddGirth{});
    CHECK_THROWS_AS(brute_force_odd_girth(gen_path(13)), Error);
}

TEST_CASE("odd_girth agrees with brute force on random graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Vertex n = static_cast<Vertex>(6 + seed % 5);
        Graph g = test::gnm_random_graph(n, static_cast<std::int64_t>(seed % 14), seed * 13 + 1);
        CHECK(odd_girth(g) == brute_force_odd_girth(g));
    }
}

TEST_CASE("odd_girth infinite iff bipartite") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = test::gnm_random_graph(9, 12, seed + 900);
        CHECK(is_bipartite(g).ok() == !odd_girth(g).has_value());
    }
}

TEST_CASE("witness matches odd girth on random graphs") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = test::gnm_random_graph(10, 15, seed * 7 + 3);
        auto og = odd_girth(g);
        auto w = shortest_odd_cycle(g);
        CHECK(og.has_value() == w.has_value());
        if (w) check_simple_odd_cycle(g, *w, *og);
    }
}

TEST_CASE("odd girth is monotone under edge deletion") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = test::gnm_random_graph(9, 14, seed + 41);
        auto base = odd_girth(g);
        if (!base) continue;
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        for (std::size_t drop = 0; drop < edges.size(); ++drop) {
            std::vector<Edge> rest;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (i != drop) rest.push_back(edges[i]);
            auto og = odd_girth(Graph::from_edge_list(g.vertex_count(), rest));
            if (og) CHECK(*og >= *base);
        }
    }
}

TEST_CASE("reduce_to_simple_odd_cycle splits at repeated vertices") {
    // Triangle 0,1,2 and square 0,3,4,5 glued at 0; the length-7 walk around
    // both must reduce to the triangle.
    Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {0, 5}});
    std::vector<Vertex> walk{0, 1, 2, 0, 3, 4, 5, 0};
    auto cyc = reduce_to_simple_odd_cycle(g, walk);
    check_simple_odd_cycle(g, cyc, 3);
    CHECK(std::set<Vertex>(cyc.begin(), cyc.end()) == std::set<Vertex>{0, 1, 2});

    CHECK_THROWS_AS(reduce_to_simple_odd_cycle(g, {0, 1, 2}), Error);          // not closed
    CHECK_THROWS_AS(reduce_to_simple_odd_cycle(g, {0, 1, 2, 1, 0}), Error);    // even
    CHECK_THROWS_AS(reduce_to_simple_odd_cycle(g, {0, 1, 4, 0}), Error);       // non-edge
}

TEST_CASE("brute_force_max_independent_set on known graphs") {
    Graph c5 = gen_cycle(5);
    auto s5 = brute_force_max_independent_set(c5);
    CHECK(s5.size() == 2);
    CHECK(is_independent_set(c5, s5).independent);

    CHECK(brute_force_max_independent_set(gen_complete_bipartite(3, 3)).size() == 3);
    CHECK(brute_force_max_independent_set(Graph::from_edge_list(6, {})).size() == 6);
    CHECK_THROWS_AS(brute_force_max_independent_set(Graph::from_edge_list(25, {})), Error);
}

TEST_CASE("brute_force_max_independent_set is maximum on small graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = test::gnm_random_graph(10, 16, seed + 333);
        auto best = brute_force_max_independent_set(g);
        CHECK(is_independent_set(g, best).independent);
        // No larger independent set exists: check against exhaustive subsets.
        const Vertex n = g.vertex_count();
        std::size_t alpha = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Vertex> mem;
            for (Vertex v = 0; v < n; ++v)
                if (mask & (1u << v)) mem.push_back(v);
            if (mem.size() <= alpha) continue;
            if (is_independent_set(g, VertexSet(n, mem)).independent) alpha = mem.size();
        }
        CHECK(best.size() == alpha);
    }
}
