#ifndef RHOT_CLIQUES_HPP
#define RHOT_CLIQUES_HPP

#include <cstdint>
#include <vector>

#include "rhot/graph.hpp"

namespace rhot {

// All cliques of one fixed order t in a host graph, in lexicographic order of
// their sorted vertex tuples, plus a per-vertex incidence index.
struct CliqueSet {
    int t = 0;
    int n = 0;
    std::vector<VertexSet> cliques;
    std::vector<std::uint8_t> flat_vertices;            // t entries per clique, ascending
    std::vector<std::vector<std::int32_t>> incidence;   // clique indices per vertex

    std::size_t count() const { return cliques.size(); }
    const std::uint8_t* clique_vertices(std::size_t i) const { return flat_vertices.data() + i * static_cast<std::size_t>(t); }
    VertexSet covered() const;
};

CliqueSet enumerate_cliques(const Graph& g, int t);

// Exact c_t(K_{k-1} v T_r(n-k+1)) via elementary symmetric polynomials of the
// Turan part sizes.
long long count_join_turan_cliques(int n, int k, int r, int t);

struct CliqueComponents {
    std::vector<VertexSet> components;  // ordered by smallest member vertex
    VertexSet uncovered = 0;            // vertices in no t-clique
};

CliqueComponents clique_components(const CliqueSet& cs);
CliqueComponents clique_components(const Graph& g, int t);

// Every vertex in some t-clique and all cliques reachable from each other by
// shared vertices.
bool clique_connected(const CliqueSet& cs);
bool clique_connected(const Graph& g, int t);

bool is_clique_regular(const Graph& g, int t);

long long binomial(int n, int k);

}  // namespace rhot

#endif
