#include "rhot/cliques.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace rhot {

VertexSet CliqueSet::covered() const {
    VertexSet m = 0;
    for (VertexSet c : cliques) m |= c;
    return m;
}

namespace {

void extend_clique(const Graph& g, int t, std::vector<std::uint8_t>& cur, VertexSet cur_mask,
                   VertexSet cands, CliqueSet& out) {
    // cands already excludes vertices <= the last chosen one, so the sorted
    // tuples come out in lexicographic order.
    while (cands) {
        int v = std::countr_zero(cands);
        cands &= cands - 1;
        cur.push_back(static_cast<std::uint8_t>(v));
        if (static_cast<int>(cur.size()) == t) {
            VertexSet mask = cur_mask | vertex_bit(v);
            std::int32_t idx = static_cast<std::int32_t>(out.cliques.size());
            out.cliques.push_back(mask);
            out.flat_vertices.insert(out.flat_vertices.end(), cur.begin(), cur.end());
            for (std::uint8_t u : cur) out.incidence[u].push_back(idx);
        } else {
            VertexSet higher = ~(vertex_bit(v) | (vertex_bit(v) - 1));
            extend_clique(g, t, cur, cur_mask | vertex_bit(v), cands & g.neighbors(v) & higher, out);
        }
        cur.pop_back();
    }
}

}  // namespace

CliqueSet enumerate_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("enumerate_cliques: t must be >= 1");
    CliqueSet cs;
    cs.t = t;
    cs.n = g.order();
    cs.incidence.assign(static_cast<std::size_t>(g.order()), {});
    if (t > g.order()) return cs;
    std::vector<std::uint8_t> cur;
    cur.reserve(static_cast<std::size_t>(t));
    extend_clique(g, t, cur, 0, g.vertex_mask(), cs);
    return cs;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;  // intermediates overflow int64 around C(63,31)
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<long long>(r);
}

long long count_join_turan_cliques(int n, int k, int r, int t) {
    if (r < 1 || t < 1 || k < 1 || n < k - 1)
        throw std::invalid_argument("count_join_turan_cliques: bad parameters");
    const int m = n - k + 1;
    std::vector<int> sizes;
    int q = m / r, rem = m % r;
    for (int i = 0; i < r; ++i) {
        int s = q + (i < rem ? 1 : 0);
        if (s > 0) sizes.push_back(s);
    }
    // e[s] = elementary symmetric polynomial of the part sizes.
    std::vector<long long> e(static_cast<std::size_t>(t) + 1, 0);
    e[0] = 1;
    for (int s : sizes)
        for (int j = t; j >= 1; --j) e[static_cast<std::size_t>(j)] += s * e[static_cast<std::size_t>(j) - 1];

    long long total = 0;
    for (int j = 0; j <= std::min(k - 1, t); ++j)
        total += binomial(k - 1, j) * e[static_cast<std::size_t>(t - j)];
    return total;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

CliqueComponents clique_components(const CliqueSet& cs) {
    const int n = cs.n;
    UnionFind uf(n);
    for (std::size_t i = 0; i < cs.count(); ++i) {
        const std::uint8_t* v = cs.clique_vertices(i);
        for (int j = 1; j < cs.t; ++j) uf.unite(v[0], v[j]);
    }
    VertexSet cov = cs.covered();
    CliqueComponents out;
    out.uncovered = all_vertices(n) & ~cov;
    std::vector<VertexSet> by_root(static_cast<std::size_t>(n), 0);
    VertexSet scan = cov;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        by_root[static_cast<std::size_t>(uf.find(v))] |= vertex_bit(v);
    }
    for (VertexSet comp : by_root)
        if (comp) out.components.push_back(comp);
    return out;
}

CliqueComponents clique_components(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("clique_components: t must be >= 2");
    return clique_components(enumerate_cliques(g, t));
}

bool clique_connected(const CliqueSet& cs) {
    if (cs.n == 0) return false;
    CliqueComponents cc = clique_components(cs);
    return cc.uncovered == 0 && cc.components.size() == 1;
}

bool clique_connected(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("clique_connected: t must be >= 2");
    return clique_connected(enumerate_cliques(g, t));
}

bool is_clique_regular(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("is_clique_regular: t must be >= 2");
    CliqueSet cs = enumerate_cliques(g, t);
    if (g.order() == 0) return true;
    std::size_t first = cs.incidence[0].size();
    for (int v = 1; v < g.order(); ++v)
        if (cs.incidence[static_cast<std::size_t>(v)].size() != first) return false;
    return true;
}

}  // namespace rhot
