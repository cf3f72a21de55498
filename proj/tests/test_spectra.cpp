#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rhot/cliques.hpp"
#include "rhot/extremal.hpp"
#include "rhot/spectra.hpp"

using namespace rhot;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph two_triangles() {
    Graph g(6);
    for (int base : {0, 3})
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) g.add_edge(base + a, base + b);
    return g;
}

std::vector<double> random_unit_vector(std::mt19937_64& rng, int n, int t) {
    std::exponential_distribution<double> pos(1.0);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = pos(rng) + 1e-6;
    double norm = lt_norm(x, t);
    for (double& v : x) v /= norm;
    return x;
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("apply_tensor on named graphs") {
    CliqueSet k3t3 = enumerate_cliques(complete_graph(3), 3);
    CHECK(apply_tensor(k3t3, {1, 1, 1}) == std::vector<double>{1, 1, 1});

    CliqueSet k4t3 = enumerate_cliques(complete_graph(4), 3);
    CHECK(apply_tensor(k4t3, {1, 1, 1, 1}) == std::vector<double>{3, 3, 3, 3});

    CliqueSet k3t2 = enumerate_cliques(complete_graph(3), 2);
    CHECK(apply_tensor(k3t2, {1, 2, 3}) == std::vector<double>{5, 4, 3});

    CHECK_THROWS_AS(apply_tensor(k3t2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(apply_tensor(k3t2, {1, -2, 3}), std::invalid_argument);

    // zero at vertices in no t-clique
    Graph k3_plus_iso(4);
    k3_plus_iso.add_edge(0, 1);
    k3_plus_iso.add_edge(0, 2);
    k3_plus_iso.add_edge(1, 2);
    CliqueSet cs = enumerate_cliques(k3_plus_iso, 3);
    std::vector<double> out = apply_tensor(cs, {1, 1, 1, 5});
    CHECK(out[3] == 0.0);
}

TEST_CASE("rayleigh on named vectors") {
    CliqueSet k2 = enumerate_cliques(complete_graph(2), 2);
    double s = 1.0 / std::sqrt(2.0);
    CHECK(rayleigh(k2, {s, s}) == doctest::Approx(1.0).epsilon(1e-12));

    CliqueSet k3 = enumerate_cliques(complete_graph(3), 3);
    double u3 = std::pow(3.0, -1.0 / 3.0);
    CHECK(rayleigh(k3, {u3, u3, u3}) == doctest::Approx(1.0).epsilon(1e-12));

    CliqueSet k4 = enumerate_cliques(complete_graph(4), 3);
    double u4 = std::pow(4.0, -1.0 / 3.0);
    CHECK(rayleigh(k4, {u4, u4, u4, u4}) == doctest::Approx(3.0).epsilon(1e-12));

    CHECK_THROWS_AS(rayleigh(k2, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("eigen_residual on named pairs") {
    CliqueSet k3t3 = enumerate_cliques(complete_graph(3), 3);
    CHECK(eigen_residual(k3t3, 1.0, {1, 1, 1}) == 0.0);

    CliqueSet k4t3 = enumerate_cliques(complete_graph(4), 3);
    double u4 = std::pow(4.0, -1.0 / 3.0);
    CHECK(eigen_residual(k4t3, 3.0, {u4, u4, u4, u4}) < 1e-15);

    CliqueSet k3t2 = enumerate_cliques(complete_graph(3), 2);
    CHECK(eigen_residual(k3t2, 1.0, {1, 1, 1}) == 1.0);
}

TEST_CASE("spectral radius of complete graphs is a binomial coefficient") {
    CHECK(spectral_radius(complete_graph(2), 2).rho == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(spectral_radius(complete_graph(4), 3).rho == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(spectral_radius(complete_graph(5), 3).rho == doctest::Approx(6.0).epsilon(1e-10));
}

TEST_CASE("spectral radius of named graphs") {
    CHECK(spectral_radius(turan_graph(6, 3), 3).rho == doctest::Approx(4.0).epsilon(1e-10));
    SpectralResult res = spectral_radius(cycle_graph(5), 3);
    CHECK(res.rho == 0.0);
    CHECK(res.components.empty());
    CHECK(res.converged);
    CHECK(spectral_radius(cycle_graph(4), 2).rho == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_THROWS_AS(spectral_radius(complete_graph(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(complete_graph(4), 3, {-1.0, 100, 1.0, nullptr}),
                    std::invalid_argument);
}

TEST_CASE("result invariants: positive normalized perron vectors, small residual") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        Graph g = oracles::random_graph(rng, n, 0.6);
        int t = 2 + static_cast<int>(rng() % 3);
        SpectralResult res = spectral_radius(g, t);
        if (res.components.empty()) {
            CHECK(res.rho == 0.0);
            continue;
        }
        REQUIRE(res.converged);
        CHECK(res.residual <= 1e-10);
        double best = 0.0;
        for (const ComponentResult& cr : res.components) {
            best = std::max(best, cr.rho);
            CHECK(std::abs(lt_norm(cr.perron, t) - 1.0) <= 1e-12);
            for (double v : cr.perron) CHECK(v > 0.0);
        }
        CHECK(res.rho == best);
        CHECK(res.rho >= 0.0);
    }
}

TEST_CASE("rayleigh quotients never exceed the spectral radius") {
    std::mt19937_64 rng(2718);
    for (int gi = 0; gi < 12; ++gi) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = oracles::random_graph(rng, n, 0.7);
        int t = 2 + static_cast<int>(rng() % 2);
        CliqueSet cs = enumerate_cliques(g, t);
        double rho = spectral_radius(g, t).rho;
        for (int k = 0; k < 1000; ++k) {
            std::vector<double> x = random_unit_vector(rng, n, t);
            CHECK(rayleigh(cs, x) <= rho + 1e-9);
        }
    }
}

TEST_CASE("t = 2 agrees with a dense symmetric eigensolver") {
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = oracles::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
        double expected = oracles::eigen_top_eigenvalue(g);
        double got = n >= 2 ? spectral_radius(g, 2).rho : 0.0;
        CHECK(got == doctest::Approx(std::max(expected, 0.0)).epsilon(1e-8));
    }
}

TEST_CASE("clique-count lower bound, with equality in the clique-regular case") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (int t = 2; t <= std::min(n, 4); ++t) {
                double ct = static_cast<double>(enumerate_cliques(g, t).count());
                double rho = spectral_radius(g, t).rho;
                CHECK(rho >= static_cast<double>(t) / n * ct - 1e-9);
                if (is_clique_regular(g, t))
                    CHECK(rho == doctest::Approx(static_cast<double>(t) / n * ct).epsilon(1e-8));
            }
        }
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        Graph g = oracles::random_graph(rng, n, 0.5);
        for (int t = 2; t <= 4; ++t) {
            double ct = static_cast<double>(enumerate_cliques(g, t).count());
            CHECK(spectral_radius(g, t).rho >= static_cast<double>(t) / n * ct - 1e-9);
        }
    }
}

TEST_CASE("strict growth when a new clique joins a connected tensor") {
    // K_4 minus an edge, put it back at t = 3: two triangles become four.
    Graph g = complete_graph(4);
    g.remove_edge(0, 1);
    double before = spectral_radius(g, 3).rho;
    double after = spectral_radius(complete_graph(4), 3).rho;
    CHECK(after == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(after > before + 1e-10);

    std::mt19937_64 rng(5150);
    int done = 0;
    while (done < 50) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph h = oracles::random_graph(rng, n, 0.55 + 0.3 * (rng() % 2));
        int t = 2 + static_cast<int>(rng() % 3);
        std::vector<std::pair<int, int>> missing;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!h.has_edge(a, b)) missing.emplace_back(a, b);
        if (missing.empty()) continue;
        auto [a, b] = missing[rng() % missing.size()];
        Graph h2 = h;
        h2.add_edge(a, b);
        if (enumerate_cliques(h2, t).count() <= enumerate_cliques(h, t).count()) continue;
        if (!weakly_irreducible(h2, t)) continue;
        CHECK(spectral_radius(h2, t).rho > spectral_radius(h, t).rho + 1e-10);
        ++done;
    }
}

TEST_CASE("weak irreducibility on named graphs") {
    CHECK(weakly_irreducible(complete_graph(4), 3));
    Graph k4_plus_iso(5);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4_plus_iso.add_edge(a, b);
    CHECK_FALSE(weakly_irreducible(k4_plus_iso, 3));
    CHECK_FALSE(weakly_irreducible(two_triangles(), 3));
}

TEST_CASE("weak irreducibility equals clique connectivity, exhaustively to n = 5") {
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (int t = 2; t <= n; ++t)
                CHECK(weakly_irreducible(g, t) == clique_connected(g, t));
        }
}

TEST_CASE("perron vector is independent of the starting vector") {
    std::mt19937_64 rng(8128);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracles::random_graph(rng, n, 0.65);
        int t = 2 + static_cast<int>(rng() % 2);
        SpectralResult base = spectral_radius(g, t);
        if (base.components.empty() || !base.converged) continue;

        std::vector<double> start(static_cast<std::size_t>(n));
        std::uniform_real_distribution<double> unif(0.1, 2.0);
        for (double& v : start) v = unif(rng);
        SpectralOptions opts;
        opts.start = &start;
        SpectralResult other = spectral_radius(g, t, opts);
        REQUIRE(other.components.size() == base.components.size());
        CHECK(other.rho == doctest::Approx(base.rho).epsilon(1e-9));
        for (std::size_t c = 0; c < base.components.size(); ++c) {
            REQUIRE(base.components[c].vertices == other.components[c].vertices);
            for (std::size_t i = 0; i < base.components[c].perron.size(); ++i)
                CHECK(base.components[c].perron[i] ==
                      doctest::Approx(other.components[c].perron[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("max-entry rescaling helper") {
    std::vector<double> x = scale_to_max_entry({0.2, 0.4, 0.1});
    CHECK(x[1] == 1.0);
    CHECK(x[0] == doctest::Approx(0.5));
    CHECK(scale_to_max_entry({0.0, 0.0}) == std::vector<double>{0.0, 0.0});
}

}  // TEST_SUITE
