#include "rhot/freeness.hpp"

#include <bit>
#include <stdexcept>

#include "rhot/cliques.hpp"

namespace rhot {

namespace {

bool pack_rec(const std::vector<VertexSet>& cliques, std::size_t from, VertexSet used,
              int remaining, int clique_size, int n, std::vector<VertexSet>& chosen) {
    if (remaining == 0) return true;
    for (std::size_t i = from; i < cliques.size(); ++i) {
        if (cliques[i] & used) continue;
        VertexSet next_used = used | cliques[i];
        if (n - std::popcount(next_used) < (remaining - 1) * clique_size) continue;
        chosen.push_back(cliques[i]);
        if (pack_rec(cliques, i + 1, next_used, remaining - 1, clique_size, n, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Packing> find_disjoint_packing(const Graph& g, FreenessQuery q) {
    if (q.k < 1 || q.r < 1)
        throw std::invalid_argument("find_disjoint_packing: need k >= 1 and r >= 1");
    const int size = q.r + 1;
    if (g.order() < q.k * size) return std::nullopt;
    CliqueSet cs = enumerate_cliques(g, size);
    if (static_cast<int>(cs.count()) < q.k) return std::nullopt;
    std::vector<VertexSet> chosen;
    chosen.reserve(static_cast<std::size_t>(q.k));
    if (pack_rec(cs.cliques, 0, 0, q.k, size, g.order(), chosen))
        return Packing{std::move(chosen)};
    return std::nullopt;
}

bool is_free(const Graph& g, FreenessQuery q) {
    return !find_disjoint_packing(g, q).has_value();
}

}  // namespace rhot
