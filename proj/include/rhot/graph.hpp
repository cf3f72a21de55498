#ifndef RHOT_GRAPH_HPP
#define RHOT_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rhot {

// One machine word per adjacency row; everything downstream relies on it.
inline constexpr int kMaxVertices = 64;

// Subset of vertices, bit v = vertex v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Simple undirected graph on vertices 0..n-1, symmetric loop-free bitset rows.
// Treated as immutable once built; cheap to copy and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    int edge_count() const;
    VertexSet vertex_mask() const { return all_vertices(n_); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// graph6 decode failure; offset is the byte position in the input line.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph complete_graph(int n);
Graph turan_graph(int n, int r);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph join(const Graph& a, const Graph& b);

// Exact isomorphism test, color refinement + backtracking; n <= 16.
bool are_isomorphic(const Graph& a, const Graph& b);

// Exact maximum matching size, branch and bound.
int matching_number(const Graph& g);

// Max edge count over graphs with matching number <= m and max degree <= delta.
long long chvatal_hanson_bound(long long m, long long delta);

// Apex clique joined to a complete multipartite graph: K_apex v K_r(parts).
struct PartitionSpec {
    int apex = 0;
    std::vector<int> parts;  // non-increasing, every part >= 1

    PartitionSpec(int apex_count, std::vector<int> part_sizes);
    int total() const;
    Graph build() const;
};

}  // namespace rhot

#endif
