#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idom {

/// Vertex counts are capped so every neighborhood fits in one 64-bit mask.
inline constexpr int MAX_VERTICES = 64;

/// Thrown when a graph or a solve would exceed an implementation limit
/// (malformed arguments throw std::invalid_argument instead).
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1, immutable once built.
/// The adjacency relation is symmetric and irreflexive by construction;
/// each row is stored as a 64-bit mask so neighborhood sums and closed
/// neighborhoods are single word operations.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // n isolated vertices

    /// Builds a graph from unordered endpoint pairs. Duplicate edges are
    /// merged; self-loops and out-of-range endpoints are rejected.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::uint64_t neighbor_mask(int v) const;         // N(v)
    std::uint64_t closed_neighbor_mask(int v) const;  // N[v]
    std::uint64_t vertex_mask() const;                // all of V
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;   // u < v, lexicographic

    bool operator==(const Graph& other) const = default;

private:
    void add_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

enum class GraphFamily { path, cycle, complete, empty, complete_bipartite, star };

/// Canonical family layouts: paths and cycles number vertices in order,
/// K_{p,q} puts part A at 0..p-1 and part B at p..p+q-1, star(m) = K_{1,m}
/// with the center at vertex 0.
Graph generate(GraphFamily family, const std::vector<int>& params);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph star_graph(int leaves);

/// G keeps its indices, H's vertices are shifted by |V(G)|; no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertices of degree exactly 1.
std::vector<int> pendant_vertices(const Graph& g);

/// Vertices adjacent to every other vertex; for n = 1 the single vertex counts.
std::vector<int> universal_vertices(const Graph& g);

enum class TwinRelation { true_twins, false_twins, not_twins };

/// true_twins iff N[u] = N[v] (forces u ~ v), false_twins iff N(u) = N(v)
/// (forces u !~ v). Requires u != v.
TwinRelation twin_relation(const Graph& g, int u, int v);

/// Partition of V into maximal connected sets, ordered by smallest member;
/// vertices inside each component are sorted.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace idom
