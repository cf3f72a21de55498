#include "rhot/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace rhot {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::length_error("graph order must be between 0 and 64, got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)] &= ~vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~vertex_bit(u);
}

int Graph::degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
    int total = 0;
    for (VertexSet row : adj_) total += std::popcount(row);
    return total / 2;
}

parse_error::parse_error(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

namespace {

constexpr int kG6Base = 63;

// Number of payload bytes for the packed upper triangle.
std::size_t g6_payload_bytes(int n) {
    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw parse_error("empty graph6 line", 0);

    std::size_t pos = 0;
    int n;
    if (line[0] == 126) {
        // 4-byte header '~' b1 b2 b3 encoding n in 18 bits.
        if (line.size() < 4) throw parse_error("truncated graph6 header", line.size());
        if (line[1] == 126) throw parse_error("graph order beyond capacity", 1);
        n = 0;
        for (std::size_t i = 1; i < 4; ++i) {
            int c = static_cast<unsigned char>(line[i]);
            if (c < kG6Base || c > 126) throw parse_error("graph6 header byte out of range", i);
            n = (n << 6) | (c - kG6Base);
        }
        pos = 4;
    } else {
        int c = static_cast<unsigned char>(line[0]);
        if (c < kG6Base || c > 126) throw parse_error("graph6 header byte out of range", 0);
        n = c - kG6Base;
        pos = 1;
    }
    if (n > kMaxVertices) throw parse_error("graph order " + std::to_string(n) + " exceeds capacity 64", 0);

    const std::size_t payload = g6_payload_bytes(n);
    if (line.size() < pos + payload) throw parse_error("truncated graph6 payload", line.size());
    if (line.size() > pos + payload) throw parse_error("trailing bytes after graph6 payload", pos + payload);

    Graph g(n);
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                int c = static_cast<unsigned char>(line[pos]);
                if (c < kG6Base || c > 126) throw parse_error("graph6 payload byte out of range", pos);
                acc = c - kG6Base;
                nbits = 6;
                ++pos;
            }
            --nbits;
            if ((acc >> nbits) & 1) g.add_edge(row, col);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Base + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(kG6Base + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Base + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Base + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kG6Base + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(kG6Base + (acc << (6 - nbits))));
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph turan_graph(int n, int r) {
    if (n < 0) throw std::invalid_argument("turan_graph: negative order");
    if (r < 1) throw std::invalid_argument("turan_graph: need at least one part");
    // Larger parts first: n%r parts of size ceil(n/r), the rest floor(n/r).
    std::vector<int> sizes;
    int q = n / r, rem = n % r;
    for (int i = 0; i < r; ++i) {
        int s = q + (i < rem ? 1 : 0);
        if (s > 0) sizes.push_back(s);
    }
    if (sizes.empty()) return Graph(0);
    return complete_multipartite(sizes);
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("complete_multipartite: no parts");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: part size must be >= 1");
        n += s;
    }
    Graph g(n);
    int start = 0;
    for (int s : sizes) {
        for (int u = start; u < start + s; ++u)
            for (int v = start + s; v < n; ++v) g.add_edge(u, v);
        start += s;
    }
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    if (na + nb > kMaxVertices)
        throw std::length_error("join: combined order exceeds capacity 64");
    Graph g(na + nb);
    for (int u = 0; u < na; ++u)
        for (int v = u + 1; v < na; ++v)
            if (a.has_edge(u, v)) g.add_edge(u, v);
    for (int u = 0; u < nb; ++u)
        for (int v = u + 1; v < nb; ++v)
            if (b.has_edge(u, v)) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

namespace {

// Iterated neighborhood-color refinement. Both graphs share the color
// dictionary so classes are comparable across them.
struct Refinement {
    std::vector<int> ca, cb;
    bool compatible;
};

Refinement refine_colors(const Graph& a, const Graph& b) {
    const int n = a.order();
    std::vector<int> ca(n, 0), cb(n, 0);
    int ncolors = 1;
    for (int round = 0; round < n; ++round) {
        // Signature: own color plus sorted neighbor colors.
        std::vector<std::vector<int>> siga(n), sigb(n);
        auto build = [&](const Graph& g, const std::vector<int>& col, std::vector<std::vector<int>>& sig) {
            for (int v = 0; v < n; ++v) {
                sig[v].push_back(col[v]);
                VertexSet nb = g.neighbors(v);
                while (nb) {
                    int u = std::countr_zero(nb);
                    nb &= nb - 1;
                    sig[v].push_back(col[u]);
                }
                std::sort(sig[v].begin() + 1, sig[v].end());
            }
        };
        build(a, ca, siga);
        build(b, cb, sigb);

        std::vector<std::vector<int>> dict;
        auto lookup = [&](const std::vector<int>& s) {
            for (std::size_t i = 0; i < dict.size(); ++i)
                if (dict[i] == s) return static_cast<int>(i);
            dict.push_back(s);
            return static_cast<int>(dict.size() - 1);
        };
        std::vector<int> na2(n), nb2(n);
        for (int v = 0; v < n; ++v) na2[v] = lookup(siga[v]);
        for (int v = 0; v < n; ++v) nb2[v] = lookup(sigb[v]);

        int newcount = static_cast<int>(dict.size());
        if (newcount == ncolors) break;
        ncolors = newcount;
        ca = std::move(na2);
        cb = std::move(nb2);
    }
    // Color histograms must match for an isomorphism to exist.
    std::vector<int> ha(static_cast<std::size_t>(ncolors) + 1, 0), hb(ha);
    for (int v = 0; v < n; ++v) {
        if (ca[v] < static_cast<int>(ha.size())) ++ha[ca[v]];
        if (cb[v] < static_cast<int>(hb.size())) ++hb[cb[v]];
    }
    return {std::move(ca), std::move(cb), ha == hb};
}

bool iso_extend(const Graph& a, const Graph& b, const Refinement& ref,
                const std::vector<int>& order, std::size_t depth,
                std::vector<int>& map, VertexSet used) {
    const int n = a.order();
    if (depth == order.size()) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
        if (used & vertex_bit(w)) continue;
        if (ref.ca[v] != ref.cb[w]) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d)
            ok = a.has_edge(v, order[d]) == b.has_edge(w, map[order[d]]);
        if (!ok) continue;
        map[v] = w;
        if (iso_extend(a, b, ref, order, depth + 1, map, used | vertex_bit(w))) return true;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > 16 || b.order() > 16)
        throw std::length_error("are_isomorphic: order exceeds capacity 16");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    const int n = a.order();
    if (n == 0) return true;

    Refinement ref = refine_colors(a, b);
    if (!ref.compatible) return false;

    // Map rare color classes first.
    std::vector<int> class_size(n + 1, 0);
    for (int v = 0; v < n; ++v) ++class_size[ref.ca[v]];
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ref.ca[x]] != class_size[ref.ca[y]])
            return class_size[ref.ca[x]] < class_size[ref.ca[y]];
        return x < y;
    });

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    return iso_extend(a, b, ref, order, 0, map, 0);
}

namespace {

void matching_rec(const std::vector<VertexSet>& adj, VertexSet active, int cur, int& best) {
    // Drop vertices with no active neighbor.
    for (;;) {
        VertexSet dead = 0;
        VertexSet scan = active;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if ((adj[static_cast<std::size_t>(v)] & active) == 0) dead |= vertex_bit(v);
        }
        if (!dead) break;
        active &= ~dead;
    }
    if (cur > best) best = cur;
    if (!active) return;
    if (cur + std::popcount(active) / 2 <= best) return;

    int v = std::countr_zero(active);
    VertexSet nb = adj[static_cast<std::size_t>(v)] & active;
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        matching_rec(adj, active & ~(vertex_bit(v) | vertex_bit(u)), cur + 1, best);
    }
    matching_rec(adj, active & ~vertex_bit(v), cur, best);
}

}  // namespace

int matching_number(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    int best = 0;
    matching_rec(adj, all_vertices(n), 0, best);
    return best;
}

long long chvatal_hanson_bound(long long m, long long delta) {
    if (m < 1 || delta < 1)
        throw std::invalid_argument("chvatal_hanson_bound: need m >= 1 and delta >= 1");
    long long half_down = delta / 2;
    long long half_up = (delta + 1) / 2;
    return delta * m + half_down * (m / half_up);
}

PartitionSpec::PartitionSpec(int apex_count, std::vector<int> part_sizes)
    : apex(apex_count), parts(std::move(part_sizes)) {
    if (apex < 0) throw std::invalid_argument("PartitionSpec: negative apex");
    if (parts.empty()) throw std::invalid_argument("PartitionSpec: no parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("PartitionSpec: part size must be >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("PartitionSpec: parts must be non-increasing");
    }
}

int PartitionSpec::total() const {
    int n = apex;
    for (int s : parts) n += s;
    return n;
}

Graph PartitionSpec::build() const {
    return join(complete_graph(apex), complete_multipartite(parts));
}

}  // namespace rhot
