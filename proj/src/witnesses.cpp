#include "idom/witnesses.hpp"

#include <sstream>

#include "idom/operators.hpp"

namespace idom {

std::string ClosedForm::describe() const {
    std::ostringstream out;
    out << theorem_id << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out << ',';
        out << params[i];
    }
    out << ')';
    if (value) out << " = " << *value;
    if (bounds) out << " in [" << bounds->first << ',' << bounds->second << ']';
    return out.str();
}

int formula_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    return (n + 2) / 2;  // ceil((n+1)/2)
}

int formula_corona_general(int n_g) {
    if (n_g < 1) throw std::invalid_argument("corona root graph needs n >= 1");
    return 2 * n_g;
}

std::pair<int, int> bounds_corona_k1(int n) {
    if (n < 1) throw std::invalid_argument("corona root graph needs n >= 1");
    return {n + 1, 2 * n};
}

int formula_bipartite_corona(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bipartite corona needs p, q >= 1");
    return (p == 1 || q == 1) ? p + q + 1 : p + q + 2;
}

int formula_double_corona(int n_g) {
    if (n_g < 1) throw std::invalid_argument("corona root graph needs n >= 1");
    return 3 * n_g;
}

int formula_corona_k1_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    return (4 * n + 2) / 3;  // ceil(4n/3)
}

int formula_corona_k1_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    return (4 * n + 2) / 3;
}

Graph realize_corona_k1(int n, int a) {
    if (n < 1) throw std::invalid_argument("realization needs n >= 1");
    auto [lo, hi] = bounds_corona_k1(n);
    if (a < lo || a > hi)
        throw std::invalid_argument("target value outside the realizable range [n+1, 2n]");
    // A star K_{1,m} forces its pendant-corona value down by one per leaf, so
    // m = 2n - a leaves hit the target exactly; padding with isolated
    // vertices keeps the order at n without changing the deficit.
    int m = 2 * n - a;
    Graph block = (m == 0) ? Graph(1) : star_graph(m);
    Graph g = block;
    for (int extra = n - (m + 1); extra > 0; --extra) g = disjoint_union(g, Graph(1));
    return g;
}

Labeling witness_corona(const Graph& g, const Graph& h) {
    auto [product, map] = corona(g, h);
    Labeling f(product.vertex_count());
    for (int i = 0; i < map.n_g; ++i) f.set(map.g_vertex(i), 2);
    return f;
}

Labeling witness_universal_corona(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    if (g.degree(v) != n - 1) throw std::invalid_argument("vertex is not universal");
    CoronaMap map{n, 1};
    Labeling f(map.size());
    f.set(map.g_vertex(v), 2);
    for (int i = 0; i < n; ++i)
        if (i != v) f.set(map.copy_vertex(i, 0), 1);
    return f;
}

Labeling witness_bipartite_corona(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("bipartite corona needs p, q >= 1");
    CoronaMap map{p + q, 1};
    Labeling f(map.size());
    auto a_vertex = [&](int i) { return i; };          // part A: u_1..u_p
    auto b_vertex = [&](int j) { return p + j; };      // part B: v_1..v_q
    if (p == 1 || q == 1) {
        // One 2 on the small side dominates the whole opposite part and its
        // own pendant; the far pendants each take a 1.
        if (p == 1) {
            f.set(a_vertex(0), 2);
            for (int j = 0; j < q; ++j) f.set(map.copy_vertex(b_vertex(j), 0), 1);
        } else {
            f.set(b_vertex(0), 2);
            for (int i = 0; i < p; ++i) f.set(map.copy_vertex(a_vertex(i), 0), 1);
        }
    } else {
        f.set(a_vertex(0), 2);
        f.set(b_vertex(0), 2);
        for (int i = 1; i < p; ++i) f.set(map.copy_vertex(a_vertex(i), 0), 1);
        for (int j = 1; j < q; ++j) f.set(map.copy_vertex(b_vertex(j), 0), 1);
    }
    return f;
}

Labeling witness_double_corona(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("corona root graph needs n >= 1");
    CoronaMap inner{n, 1};              // g plus one pendant per root
    CoronaMap outer{inner.size(), 1};   // that graph plus one pendant each
    Labeling f(outer.size());
    for (int i = 0; i < n; ++i) {
        int pendant = inner.copy_vertex(i, 0);
        f.set(pendant, 1);                            // first-level pendant
        f.set(outer.copy_vertex(pendant, 0), 1);      // its own pendant
        f.set(outer.copy_vertex(inner.g_vertex(i), 0), 1);  // root's new pendant
    }
    return f;
}

Labeling witness_path_corona(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    CoronaMap map{n, 1};
    Labeling f(map.size());
    // Place 2s one step in from the left end, every third vertex; when the
    // leftover suffix is a single vertex it takes its own 2 at the end.
    std::vector<bool> two(n, false);
    for (int i = 1; i < n; i += 3) two[i] = true;
    if (n % 3 == 1) two[n - 1] = true;
    for (int i = 0; i < n; ++i) {
        if (two[i]) f.set(map.g_vertex(i), 2);
        else f.set(map.copy_vertex(i, 0), 1);
    }
    return f;
}

}  // namespace idom
