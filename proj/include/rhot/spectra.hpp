#ifndef RHOT_SPECTRA_HPP
#define RHOT_SPECTRA_HPP

#include <vector>

#include "rhot/cliques.hpp"
#include "rhot/graph.hpp"

namespace rhot {

struct SpectralOptions {
    double tol = 1e-10;       // stop when lambda_max - lambda_min <= tol
    long max_iters = 100000;
    double shift = 1.0;       // diagonal shift keeping the iteration convergent
    const std::vector<double>* start = nullptr;  // optional positive start vector, length n
};

struct ComponentResult {
    std::vector<int> vertices;    // ascending
    double rho = 0.0;
    std::vector<double> perron;   // aligned with vertices, l_t norm 1, all entries > 0
    long iterations = 0;
    double gap = 0.0;             // final lambda_max - lambda_min
    bool converged = false;
};

struct SpectralResult {
    double rho = 0.0;
    std::vector<ComponentResult> components;
    int winner = -1;              // component attaining rho, -1 when there is none
    double residual = 0.0;        // eigen-equation defect on the winning component
    bool converged = true;        // all components converged
};

// (A x^{t-1})_j = sum over t-cliques e containing j of prod_{v in e, v != j} x_v.
std::vector<double> apply_tensor(const CliqueSet& cs, const std::vector<double>& x);

// t * sum over cliques of the vertex-product; requires x >= 0 with l_t norm 1.
double rayleigh(const CliqueSet& cs, const std::vector<double>& x);

// max_j |(A x^{t-1})_j - lambda x_j^{t-1}| over clique-covered vertices.
double eigen_residual(const CliqueSet& cs, double lambda, const std::vector<double>& x);

// rho_t(G) by shifted power iteration run independently on each t-clique
// component; graphs with no t-clique get rho = 0.
SpectralResult spectral_radius(const Graph& g, int t, const SpectralOptions& opts = {});

// Weak irreducibility of the t-clique tensor, decided by strong connectivity
// of the tensor's representation digraph over all n vertices. Kept separate
// from clique_connected so the two routes can cross-validate.
bool weakly_irreducible(const Graph& g, int t);

double lt_norm(const std::vector<double>& x, int t);

// Rescale so the largest entry is 1 (alternative eigenvector normalization).
std::vector<double> scale_to_max_entry(std::vector<double> x);

}  // namespace rhot

#endif
