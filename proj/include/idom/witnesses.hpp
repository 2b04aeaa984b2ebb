#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idom/graph.hpp"
#include "idom/labeling.hpp"

namespace idom {

/// A closed-form prediction attached to one of the named checks: either an
/// exact value or an inclusive range.
struct ClosedForm {
    std::string theorem_id;
    std::vector<int> params;
    std::optional<int> value;
    std::optional<std::pair<int, int>> bounds;

    std::string describe() const;
};

/// gamma_I(P_n) = ceil((n+1)/2).
int formula_path(int n);

/// gamma_I of a corona with any H on >= 2 vertices: 2 * |V(G)|.
int formula_corona_general(int n_g);

/// Range of gamma_I over coronas with a single pendant per vertex:
/// [n+1, 2n].
std::pair<int, int> bounds_corona_k1(int n);

/// gamma_I(K_{p,q} corona K_1): p+q+1 when min(p,q) = 1, else p+q+2.
int formula_bipartite_corona(int p, int q);

/// gamma_I of the twice-iterated single-pendant corona: 3 * |V(G)|.
int formula_double_corona(int n_g);

/// gamma_I(P_n corona K_1) = ceil(4n/3).
int formula_corona_k1_path(int n);

/// gamma_I(C_n corona K_1) = ceil(4n/3), n >= 3.
int formula_corona_k1_cycle(int n);

/// The n-vertex graph whose single-pendant corona has gamma_I exactly a:
/// a star K_{1,2n-a} (block first) plus isolated vertices. Requires
/// n+1 <= a <= 2n; anything else is rejected, matching the realizable range.
Graph realize_corona_k1(int n, int a);

/// Weight-2n upper-bound labeling on corona(g, h): 2 on every root vertex.
Labeling witness_corona(const Graph& g, const Graph& h);

/// Weight-(n+1) labeling on corona(g, K_1) when v is universal in g: 2 at v,
/// 1 at every pendant copy except v's own.
Labeling witness_universal_corona(const Graph& g, int v);

/// Optimal labeling on corona(K_{p,q}, K_1) realizing
/// formula_bipartite_corona(p, q).
Labeling witness_bipartite_corona(int p, int q);

/// Weight-3n labeling on corona(corona(g, K_1), K_1): 1 on each vertex of the
/// n pendant paths hanging off the roots.
Labeling witness_double_corona(const Graph& g);

/// Optimal labeling on corona(P_n, K_1) realizing formula_corona_k1_path(n):
/// 2 on a spaced set of path vertices, 1 on the pendant copies of the rest.
Labeling witness_path_corona(int n);

}  // namespace idom
