#include "doctest.h"

#include "idom/operators.hpp"
#include "idom/solver.hpp"
#include "idom/witnesses.hpp"
#include "test_util.hpp"

using namespace idom;

TEST_CASE("closed forms") {
    int path_values[] = {1, 2, 2, 3, 3, 4, 4, 5, 5};
    for (int n = 1; n <= 9; ++n) CHECK(formula_path(n) == path_values[n - 1]);
    for (int n = 1; n <= 16; ++n)
        CHECK(formula_path(n) == gamma_italian(path_graph(n)).value);

    CHECK(formula_corona_general(3) == 6);
    CHECK(bounds_corona_k1(4) == std::pair<int, int>{5, 8});

    CHECK(formula_bipartite_corona(1, 1) == 3);
    CHECK(formula_bipartite_corona(1, 2) == 4);
    CHECK(formula_bipartite_corona(2, 1) == 4);
    CHECK(formula_bipartite_corona(2, 2) == 6);
    CHECK(formula_bipartite_corona(2, 3) == 7);
    CHECK(formula_bipartite_corona(3, 3) == 8);

    CHECK(formula_double_corona(4) == 12);

    int pendant_path_values[] = {2, 3, 4, 6, 7, 8, 10, 11, 12};
    for (int n = 1; n <= 9; ++n) {
        CHECK(formula_corona_k1_path(n) == pendant_path_values[n - 1]);
        if (n >= 3) CHECK(formula_corona_k1_cycle(n) == pendant_path_values[n - 1]);
    }

    CHECK_THROWS_AS(formula_path(0), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona_general(0), std::invalid_argument);
    CHECK_THROWS_AS(formula_bipartite_corona(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_double_corona(0), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona_k1_path(0), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona_k1_cycle(2), std::invalid_argument);
}

TEST_CASE("describe names the construction") {
    ClosedForm cf = {"T9", {4}, 6, std::nullopt};
    CHECK_FALSE(cf.describe().empty());
}

TEST_CASE("realize hits every value in the closed range") {
    CHECK(realize_corona_k1(4, 6) == disjoint_union(star_graph(2), Graph(1)));
    CHECK(realize_corona_k1(5, 10) == empty_graph(5));
    CHECK(realize_corona_k1(3, 4) == star_graph(2));
    CHECK(realize_corona_k1(1, 2) == Graph(1));

    for (int n = 1; n <= 5; ++n)
        for (int a = n + 1; a <= 2 * n; ++a) {
            Graph g = realize_corona_k1(n, a);
            CHECK(g.vertex_count() == n);
            CHECK(gamma_italian(corona(g, Graph(1)).first).value == a);
        }

    CHECK_THROWS_AS(realize_corona_k1(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(realize_corona_k1(4, 9), std::invalid_argument);
    CHECK_THROWS_AS(realize_corona_k1(0, 1), std::invalid_argument);
}

TEST_CASE("all-roots witness") {
    auto [g, map] = corona(path_graph(3), Graph(1));
    Labeling f = witness_corona(path_graph(3), Graph(1));
    CHECK(f.weight() == 6);
    CHECK(is_idf(g, f));
    CHECK(gamma_italian(g).value == 4);

    auto [g2, map2] = corona(path_graph(2), path_graph(2));
    Labeling f2 = witness_corona(path_graph(2), path_graph(2));
    CHECK(f2.weight() == 4);
    CHECK(is_idf(g2, f2));
    CHECK(gamma_italian(g2).value == 4);
}

TEST_CASE("universal-vertex witness") {
    Graph base = star_graph(3);
    auto [g, map] = corona(base, Graph(1));
    Labeling f = witness_universal_corona(base, 0);
    CHECK(f.weight() == 5);
    CHECK(is_idf(g, f));
    CHECK(gamma_italian(g).value == 5);
    CHECK_THROWS_AS(witness_universal_corona(base, 1), std::invalid_argument);

    Labeling k1 = witness_universal_corona(Graph(1), 0);
    CHECK(k1.weight() == 2);
    CHECK(is_idf(corona(Graph(1), Graph(1)).first, k1));
}

TEST_CASE("complete bipartite witness") {
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 4; ++q) {
            Graph base = complete_bipartite_graph(p, q);
            auto [g, map] = corona(base, Graph(1));
            Labeling f = witness_bipartite_corona(p, q);
            CHECK(is_idf(g, f));
            CHECK(f.weight() == formula_bipartite_corona(p, q));
            if (p + q <= 6) CHECK(gamma_italian(g).value == f.weight());
        }
    CHECK_THROWS_AS(witness_bipartite_corona(0, 2), std::invalid_argument);
}

TEST_CASE("doubled pendant witness") {
    Graph p4 = corona(corona(Graph(1), Graph(1)).first, Graph(1)).first;
    Labeling f = witness_double_corona(Graph(1));
    CHECK(f.weight() == 3);
    CHECK(is_idf(p4, f));
    CHECK(gamma_italian(p4).value == 3);

    Graph big = corona(corona(path_graph(3), Graph(1)).first, Graph(1)).first;
    Labeling f3 = witness_double_corona(path_graph(3));
    CHECK(f3.weight() == 9);
    CHECK(is_idf(big, f3));
    CHECK(gamma_italian(big).value == 9);
}

TEST_CASE("pendant path witness across all residues") {
    int expected[] = {2, 3, 4, 6, 7};
    for (int n = 1; n <= 5; ++n) {
        Labeling f = witness_path_corona(n);
        CHECK(f.weight() == expected[n - 1]);
    }
    for (int n = 1; n <= 30; ++n) {
        auto [g, map] = corona(path_graph(n), Graph(1));
        Labeling f = witness_path_corona(n);
        CHECK(is_idf(g, f));
        CHECK(f.weight() == formula_corona_k1_path(n));
    }
}
