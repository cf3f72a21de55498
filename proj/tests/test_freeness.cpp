#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rhot/cliques.hpp"
#include "rhot/extremal.hpp"
#include "rhot/freeness.hpp"

using namespace rhot;

namespace {

// Disjoint union of k copies of K_{r+1}.
Graph disjoint_cliques(int k, int r) {
    Graph g(k * (r + 1));
    for (int c = 0; c < k; ++c)
        for (int a = 0; a < r + 1; ++a)
            for (int b = a + 1; b < r + 1; ++b)
                g.add_edge(c * (r + 1) + a, c * (r + 1) + b);
    return g;
}

}  // namespace

TEST_SUITE("freeness") {

TEST_CASE("packings on named graphs") {
    auto packing = find_disjoint_packing(complete_graph(6), {2, 2});
    REQUIRE(packing.has_value());
    REQUIRE(packing->cliques.size() == 2);
    CHECK(packing->cliques[0] == (vertex_bit(0) | vertex_bit(1) | vertex_bit(2)));
    CHECK(packing->cliques[1] == (vertex_bit(3) | vertex_bit(4) | vertex_bit(5)));

    CHECK_FALSE(find_disjoint_packing(complete_graph(5), {2, 2}).has_value());
    Graph apex_join = join(complete_graph(1), complete_multipartite({3, 3}));
    CHECK_FALSE(find_disjoint_packing(apex_join, {2, 2}).has_value());

    CHECK_THROWS_AS(find_disjoint_packing(complete_graph(3), {0, 1}), std::invalid_argument);
}

TEST_CASE("packing witnesses are valid") {
    std::mt19937_64 rng(808);
    int found = 0;
    while (found < 40) {
        int n = 6 + static_cast<int>(rng() % 4);
        Graph g = oracles::random_graph(rng, n, 0.7);
        int r = 1 + static_cast<int>(rng() % 2);
        int k = 2;
        auto packing = find_disjoint_packing(g, {k, r});
        if (!packing) continue;
        ++found;
        REQUIRE(packing->cliques.size() == static_cast<std::size_t>(k));
        VertexSet seen = 0;
        for (VertexSet c : packing->cliques) {
            CHECK(std::popcount(c) == r + 1);
            CHECK((c & seen) == 0);
            seen |= c;
            for (int a = 0; a < n; ++a) {
                if (!(c & vertex_bit(a))) continue;
                for (int b = a + 1; b < n; ++b)
                    if (c & vertex_bit(b)) CHECK(g.has_edge(a, b));
            }
        }
    }
}

TEST_CASE("named freeness facts") {
    // the pattern contains itself
    CHECK_FALSE(is_free(disjoint_cliques(2, 2), {2, 2}));
    CHECK_FALSE(is_free(disjoint_cliques(3, 1), {3, 1}));
    // Turan graphs are K_{r+1}-free
    for (int r = 1; r <= 4; ++r)
        for (int n = r; n <= 12; ++n) CHECK(is_free(turan_graph(n, r), {1, r}));
}

TEST_CASE("conjectured extremal graphs are free on a grid") {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 4; ++r)
            for (int n = k - 1 + r; n <= 14; ++n)
                CHECK(is_free(conjectured_extremal(n, k, r), {k, r}));
}

TEST_CASE("agrees with brute-force placement, exhaustively to n = 5") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (int k = 1; k <= 3; ++k)
                for (int r = 1; r <= 4; ++r) {
                    if (k * (r + 1) > 6) continue;
                    CHECK(is_free(g, {k, r}) == oracles::ref_is_free(g, k, r));
                }
        }
}

TEST_CASE("agrees with brute-force placement on sampled 6-vertex graphs") {
    std::mt19937_64 rng(140);
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracles::random_graph(rng, 6, 0.3 + 0.1 * (trial % 5));
        for (auto [k, r] : {std::pair{1, 1}, {1, 2}, {1, 4}, {2, 1}, {2, 2}, {3, 1}})
            CHECK(is_free(g, {k, r}) == oracles::ref_is_free(g, k, r));
    }
}

TEST_CASE("freeness is monotone under edge addition") {
    std::mt19937_64 rng(2222);
    int done = 0;
    while (done < 60) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = oracles::random_graph(rng, n, 0.6);
        int k = 2, r = 1 + static_cast<int>(rng() % 2);
        if (is_free(g, {k, r})) continue;
        std::vector<std::pair<int, int>> missing;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!g.has_edge(a, b)) missing.emplace_back(a, b);
        if (missing.empty()) continue;
        auto [a, b] = missing[rng() % missing.size()];
        Graph g2 = g;
        g2.add_edge(a, b);
        CHECK_FALSE(is_free(g2, {k, r}));
        ++done;
    }
}

TEST_CASE("cheap sufficient conditions for freeness") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Graph g = oracles::random_graph(rng, n, 0.5);
        int k = 1 + static_cast<int>(rng() % 3);
        int r = 1 + static_cast<int>(rng() % 3);
        if (static_cast<int>(enumerate_cliques(g, r + 1).count()) < k) CHECK(is_free(g, {k, r}));
        if (n < k * (r + 1)) CHECK(is_free(g, {k, r}));
    }
}

}  // TEST_SUITE
