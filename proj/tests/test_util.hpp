#pragma once

// Shared test helpers: seeded random graphs, exhaustive labeled-graph
// iteration, and tiny reference oracles that recompute each parameter by
// complete search. The oracles are deliberately naive so they share no code
// with the solver under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "idom/graph.hpp"
#include "idom/labeling.hpp"

namespace testutil {

inline idom::Graph random_graph(std::mt19937_64& rng, int n, int tenths) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 10 < static_cast<std::uint64_t>(tenths)) edges.emplace_back(i, j);
    return idom::Graph::from_edge_list(n, edges);
}

// Builds the labeled graph whose pair bits, in the column order
// (0,1), (0,2), (1,2), (0,3), ..., are taken from mask.
inline idom::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1) edges.emplace_back(i, j);
    return idom::Graph::from_edge_list(n, edges);
}

template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
        fn(graph_from_mask(n, mask));
}

// Walks every labeling in {0,1,2}^n in lexicographic order (index 0 most
// significant) and returns the first one passing the filter with minimum
// weight.
template <typename Valid>
idom::Labeling lex_min_optimum(const idom::Graph& g, Valid&& valid, int* value) {
    int n = g.vertex_count();
    idom::Labeling f(n, 0), best(n, 2);
    int best_weight = 2 * n + 1;
    for (;;) {
        if (valid(g, f) && f.weight() < best_weight) {
            best_weight = f.weight();
            best = f;
        }
        int i = n - 1;
        while (i >= 0 && f[i] == 2) f.set(i--, 0);
        if (i < 0) break;
        f.set(i, f[i] + 1);
    }
    *value = best_weight;
    return best;
}

inline int brute_roman(const idom::Graph& g) {
    int value = 0;
    lex_min_optimum(g, [](const idom::Graph& h, const idom::Labeling& f) {
        return idom::is_rdf(h, f);
    }, &value);
    return value;
}

inline int brute_domination(const idom::Graph& g) {
    int n = g.vertex_count();
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        std::uint64_t covered = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) covered |= g.closed_neighbor_mask(v);
        if (covered == full) best = std::min(best, std::popcount(s));
    }
    return best;
}

}  // namespace testutil
