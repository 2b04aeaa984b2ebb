#pragma once

#include <utility>

#include "idom/graph.hpp"

namespace idom {

/// Vertex layout of a corona product: G's vertices keep their indices, the
/// i-th copy of H occupies a contiguous block after them.
struct CoronaMap {
    int n_g = 0;
    int n_h = 0;

    int g_vertex(int i) const { return i; }
    int copy_vertex(int i, int j) const { return n_g + i * n_h + j; }
    int size() const { return n_g * (1 + n_h); }
};

/// Corona product: one copy of H per vertex of G, each copy joined completely
/// to its root vertex. Requires a nonempty G and a combined vertex count
/// within MAX_VERTICES.
std::pair<Graph, CoronaMap> corona(const Graph& g, const Graph& h);

/// Adds vertex n adjacent to N[u] (so the new vertex and u are adjacent).
Graph add_true_twin(const Graph& g, int u);

/// Adds vertex n adjacent to N(u) (the new vertex and u stay non-adjacent).
Graph add_false_twin(const Graph& g, int u);

}  // namespace idom
