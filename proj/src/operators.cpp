#include "idom/operators.hpp"

#include <bit>

namespace idom {

std::pair<Graph, CoronaMap> corona(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng < 1) throw std::invalid_argument("corona needs a nonempty first factor");
    long total = static_cast<long>(ng) * (1 + nh);
    if (total > MAX_VERTICES) throw limit_error("corona exceeds the vertex limit");

    CoronaMap map{ng, nh};
    auto edges = g.edges();
    auto h_edges = h.edges();
    for (int i = 0; i < ng; ++i) {
        for (const auto& [u, v] : h_edges)
            edges.emplace_back(map.copy_vertex(i, u), map.copy_vertex(i, v));
        for (int j = 0; j < nh; ++j) edges.emplace_back(map.g_vertex(i), map.copy_vertex(i, j));
    }
    return {Graph::from_edge_list(static_cast<int>(total), edges), map};
}

namespace {

Graph add_twin(const Graph& g, std::uint64_t attach_mask) {
    int n = g.vertex_count();
    if (n + 1 > MAX_VERTICES) throw limit_error("twin addition exceeds the vertex limit");
    auto edges = g.edges();
    for (std::uint64_t m = attach_mask; m; m &= m - 1)
        edges.emplace_back(n, std::countr_zero(m));
    return Graph::from_edge_list(n + 1, edges);
}

}  // namespace

Graph add_true_twin(const Graph& g, int u) {
    return add_twin(g, g.closed_neighbor_mask(u));
}

Graph add_false_twin(const Graph& g, int u) {
    return add_twin(g, g.neighbor_mask(u));
}

}  // namespace idom
