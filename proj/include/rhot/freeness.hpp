#ifndef RHOT_FREENESS_HPP
#define RHOT_FREENESS_HPP

#include <optional>
#include <vector>

#include "rhot/graph.hpp"

namespace rhot {

// Forbidden pattern kK_{r+1}: k pairwise vertex-disjoint (r+1)-cliques.
struct FreenessQuery {
    int k = 1;
    int r = 1;
};

struct Packing {
    std::vector<VertexSet> cliques;  // k disjoint (r+1)-cliques of the host graph
};

// Lexicographically first packing over the ordered (r+1)-clique list, or
// nothing when G is kK_{r+1}-free.
std::optional<Packing> find_disjoint_packing(const Graph& g, FreenessQuery q);

bool is_free(const Graph& g, FreenessQuery q);

}  // namespace rhot

#endif
