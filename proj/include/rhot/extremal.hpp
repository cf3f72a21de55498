#ifndef RHOT_EXTREMAL_HPP
#define RHOT_EXTREMAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rhot/freeness.hpp"
#include "rhot/graph.hpp"
#include "rhot/spectra.hpp"

namespace rhot {

// K_{k-1} v T_r(n-k+1), the conjectured rho_t maximizer among kK_{r+1}-free graphs.
Graph conjectured_extremal(int n, int k, int r);

// Graph at position `mask` in the lexicographic edge-mask enumeration;
// bit order matches the graph6 upper-triangle column order.
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t labeled_graph_count(int n);  // n <= 7

// Random-access graph source for scans. Either the full labeled enumeration
// on n vertices or a decoded graph6 list.
class Population {
public:
    static Population all_graphs(int n);
    static Population from_graph6_lines(const std::vector<std::string>& lines, int n,
                                        std::string source);

    std::uint64_t size() const { return count_; }
    Graph get(std::uint64_t idx) const;
    const std::string& source() const { return source_; }
    int order() const { return n_; }
    // True when the source provably contains every labeled graph on n
    // vertices, which makes threshold seeding by the conjectured graph sound.
    bool is_full_enumeration() const { return full_; }

private:
    Population() = default;
    std::string source_;
    int n_ = 0;
    std::uint64_t count_ = 0;
    bool full_ = false;
    std::vector<Graph> graphs_;  // empty in full-enumeration mode
};

struct ScanOptions {
    double tol = 1e-10;
    long max_iters = 100000;
    double shift = 1.0;
    double tie_tol = 1e-9;   // graphs within this of best_rho count as ties
    int threads = 1;
    bool prune = true;       // sound upper-bound pruning before full iteration
};

struct ScanRecord {
    // params
    int n = 0, k = 0, r = 0, t = 0;
    double tol = 0, shift = 0, tie_tol = 0;
    long max_iters = 0;
    bool prune = true;

    std::string population_source;
    std::uint64_t population_count = 0;
    std::uint64_t skipped = 0;         // wrong vertex count
    std::uint64_t free_count = 0;
    std::uint64_t unconverged = 0;

    double best_rho = 0.0;
    bool any_free = false;
    std::vector<std::string> maximizers;  // graph6, population order

    bool conjectured_defined = false;
    std::string conjectured_g6;
    bool conjectured_free = false;
    double conjectured_rho = 0.0;
    long long conjectured_edges = 0;
    long long conjectured_cliques = 0;

    long long free_max_edges = -1;
    long long free_max_cliques = -1;
    bool conjectured_attains_edge_max = false;
    bool conjectured_attains_clique_max = false;

    std::string verdict;
};

ScanRecord scan(const Population& pop, int k, int r, int t, const ScanOptions& opts = {});

std::string scan_record_json(const ScanRecord& rec);
std::string scan_record_csv_header();
std::string scan_record_csv_row(const ScanRecord& rec);

struct LowerBoundReport {
    double rho = 0.0;
    double bound = 0.0;  // (t/n) * c_t of the conjectured graph
    bool holds = false;
};

LowerBoundReport check_lower_bound(int n, int k, int r, int t, const SpectralOptions& sopts = {});

struct BalancingReport {
    double rho_before = 0.0;
    double rho_after = 0.0;
    bool increased = false;
};

// Move one vertex from part i to part j (s_i - s_j >= 2) of
// K_{k-1} v K_r(sizes) and compare rho_t.
BalancingReport verify_balancing(int k, int t, const std::vector<int>& sizes, int i, int j,
                                 const SpectralOptions& sopts = {});

struct MonotonicityReport {
    bool applicable = false;  // adding uv grows C_t and leaves the tensor weakly irreducible
    double rho_before = 0.0;
    double rho_after = 0.0;
    bool strict = false;
};

MonotonicityReport verify_monotonicity(const Graph& g, int u, int v, int t,
                                       const SpectralOptions& sopts = {});

bool maximizer_connectivity_check(const ScanRecord& rec, int t);

}  // namespace rhot

#endif
