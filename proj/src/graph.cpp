#include "idom/graph.hpp"

#include <algorithm>
#include <bit>

namespace idom {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > MAX_VERTICES) throw limit_error("vertex count exceeds limit of 64");
    n_ = n;
    adj_.assign(n, 0);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t Graph::closed_neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v] | bit(v);
}

std::uint64_t Graph::vertex_mask() const {
    if (n_ == 0) return 0;
    return n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t m = adj_[u] >> u >> 1; m; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
}

Graph generate(GraphFamily family, const std::vector<int>& params) {
    auto one = [&](const char* what) {
        if (params.size() != 1)
            throw std::invalid_argument(std::string(what) + " takes exactly one parameter");
        return params[0];
    };
    switch (family) {
        case GraphFamily::path: return path_graph(one("path"));
        case GraphFamily::cycle: return cycle_graph(one("cycle"));
        case GraphFamily::complete: return complete_graph(one("complete"));
        case GraphFamily::empty: return empty_graph(one("empty"));
        case GraphFamily::complete_bipartite:
            if (params.size() != 2)
                throw std::invalid_argument("complete_bipartite takes exactly two parameters");
            return complete_bipartite_graph(params[0], params[1]);
        case GraphFamily::star: return star_graph(one("star"));
    }
    throw std::invalid_argument("unknown graph family");
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph empty_graph(int n) {
    if (n < 1) throw std::invalid_argument("empty needs n >= 1");
    return Graph(n);
}

Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite needs p, q >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
    return Graph::from_edge_list(p + q, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng + nh > MAX_VERTICES) throw limit_error("union exceeds the vertex limit");
    auto edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(ng + u, ng + v);
    return Graph::from_edge_list(ng + nh, edges);
}

std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<int> universal_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
    return out;
}

TwinRelation twin_relation(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("twin relation needs two distinct vertices");
    if (g.closed_neighbor_mask(u) == g.closed_neighbor_mask(v)) return TwinRelation::true_twins;
    if (g.neighbor_mask(u) == g.neighbor_mask(v)) return TwinRelation::false_twins;
    return TwinRelation::not_twins;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if ((seen >> root) & 1) continue;
        std::uint64_t comp = bit(root);
        for (;;) {  // closure under adjacency
            std::uint64_t next = comp;
            for (std::uint64_t m = comp; m; m &= m - 1)
                next |= g.neighbor_mask(std::countr_zero(m));
            if (next == comp) break;
            comp = next;
        }
        seen |= comp;
        std::vector<int> members;
        for (std::uint64_t m = comp; m; m &= m - 1) members.push_back(std::countr_zero(m));
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace idom
