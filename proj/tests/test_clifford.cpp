#include "graphdirac/clifford.hpp"

#include "graphdirac/error.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace graphdirac;
using namespace graphdirac::testing;

namespace {

std::uint64_t bits(std::initializer_list<int> one_based) {
    std::uint64_t out = 0;
    for (int i : one_based) out |= std::uint64_t{1} << (i - 1);
    return out;
}

Monomial mono(std::uint64_t support) { return Monomial{support, Complex{1.0, 0.0}}; }

} // namespace

TEST_CASE("monomial products follow the two defining relations") {
    OrientedGraph p2 = path_graph(2);
    // (e1 e2) e1 = -e1 e1 e2 = e2
    Monomial left = monomial_product(p2, mono(bits({1, 2})), mono(bits({1})));
    CHECK(left.support == bits({2}));
    CHECK(left.coefficient == Complex{1.0, 0.0});

    // e_i^2 = -1
    Monomial square = monomial_product(p2, mono(bits({1})), mono(bits({1})));
    CHECK(square.support == 0);
    CHECK(square.coefficient == Complex{-1.0, 0.0});

    // non-adjacent generators commute
    OrientedGraph p3 = path_graph(3);
    CHECK(monomial_product(p3, mono(bits({1})), mono(bits({3}))) ==
          monomial_product(p3, mono(bits({3})), mono(bits({1}))));
    // adjacent generators anticommute
    Monomial ab = monomial_product(p3, mono(bits({1})), mono(bits({2})));
    Monomial ba = monomial_product(p3, mono(bits({2})), mono(bits({1})));
    CHECK(ab.support == ba.support);
    CHECK(ab.coefficient == -ba.coefficient);
}

TEST_CASE("monomial product is associative with the empty monomial as identity") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<std::uint64_t> support_dist(0, (1 << 6) - 1);
    for (int round = 0; round < 10; ++round) {
        OrientedGraph g = random_graph(rng, 6);
        std::uint64_t limit = (std::uint64_t{1} << g.vertex_count()) - 1;
        for (int i = 0; i < 1000; ++i) {
            Monomial a = mono(support_dist(rng) & limit);
            Monomial b = mono(support_dist(rng) & limit);
            Monomial c = mono(support_dist(rng) & limit);
            CHECK(monomial_product(g, monomial_product(g, a, b), c) ==
                  monomial_product(g, a, monomial_product(g, b, c)));
            CHECK(monomial_product(g, a, mono(0)) == a);
            CHECK(monomial_product(g, mono(0), a) == a);
        }
    }
}

TEST_CASE("element products expand by bilinearity") {
    OrientedGraph p2 = path_graph(2);
    AlgebraElement x;
    x.add_term(bits({1}), Complex{1.0, 0.0});
    x.add_term(0, Complex{2.0, 0.0});
    AlgebraElement y;
    y.add_term(bits({1}), Complex{1.0, 0.0});
    // (e1 + 2)(e1) = -1 + 2 e1
    AlgebraElement product = element_product(p2, x, y);
    REQUIRE(product.terms.size() == 2);
    CHECK(product.terms.at(0) == Complex{-1.0, 0.0});
    CHECK(product.terms.at(bits({1})) == Complex{2.0, 0.0});

    // cancellation drops terms: (e1)(e1) + 1 = 0
    AlgebraElement z;
    z.add_term(0, Complex{1.0, 0.0});
    AlgebraElement cancel = element_product(p2, x, y);
    cancel.add_term(0, Complex{1.0, 0.0});
    CHECK(cancel.terms.count(0) == 0);
}

TEST_CASE("central supports have even edge counts into every vertex") {
    CHECK(is_central_monomial(path_graph(5), bits({1, 3, 5})));
    CHECK_FALSE(is_central_monomial(path_graph(2), bits({1})));
    CHECK(is_central_monomial(path_graph(2), 0));
    CHECK(is_central_monomial(complete_graph(3), bits({1, 2, 3})));
}

TEST_CASE("path centers alternate between trivial and two-dimensional") {
    auto p5 = center_basis(path_graph(5));
    CHECK(p5 == std::vector<std::uint64_t>{0, bits({1, 3, 5})});

    auto p4 = center_basis(path_graph(4));
    CHECK(p4 == std::vector<std::uint64_t>{0});

    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<int>(center_basis(path_graph(n)).size()) == (n % 2 == 0 ? 1 : 2));
}

TEST_CASE("the two bridge gluings of two paths have centers 1 and 4") {
    // endpoints joined: the result is P6, center trivial
    OrientedGraph end_to_end = bridge_glue(path_graph(3), path_graph(3), {{2, 0}});
    CHECK(center_basis(end_to_end).size() == 1);

    // middle joined to an end: dimension four
    OrientedGraph mid_to_end = bridge_glue(path_graph(3), path_graph(3), {{1, 0}});
    auto centers = center_basis(mid_to_end);
    CHECK(centers ==
          std::vector<std::uint64_t>{0, bits({1, 3}), bits({1, 4, 6}), bits({3, 4, 6})});
}

TEST_CASE("commutation oracle agrees with the parity test") {
    std::mt19937 rng(101);
    std::vector<OrientedGraph> corpus{path_graph(2), path_graph(3),  path_graph(4),
                                      path_graph(5), path_graph(6),  path_graph(7),
                                      cycle_graph(4), complete_graph(3)};
    for (int round = 0; round < 10; ++round) corpus.push_back(random_graph(rng, 8));
    for (const auto& g : corpus) CHECK(center_basis(g) == center_oracle(g));

    // the triangle's full support commutes with everything
    auto k3 = center_oracle(complete_graph(3));
    CHECK(std::find(k3.begin(), k3.end(), bits({1, 2, 3})) != k3.end());

    // no relations at all: every subset is central
    CHECK(center_oracle(OrientedGraph{4, {}}).size() == 16);

    CHECK_THROWS_AS(center_oracle(path_graph(15)), Error);
    CHECK_THROWS_AS(center_basis(path_graph(31)), Error);
}

TEST_CASE("predicted center dimensions") {
    CHECK(predicted_center_dim(PathShape{5}) == 2);
    CHECK(predicted_center_dim(PathShape{4}) == 1);

    CHECK(predicted_center_dim(GluedPathsShape{3, 3, 2}) == 4);
    CHECK(predicted_center_dim(GluedPathsShape{4, 4, 2}) == 1);
    CHECK(predicted_center_dim(GluedPathsShape{4, 3, 3}) == 2);
    // both odd with an odd attach re-glues into two even paths: trivial center
    CHECK(predicted_center_dim(GluedPathsShape{5, 3, 3}) == 1);
    CHECK(center_basis(glued_paths_graph(5, 3, 3)).size() == 1);

    CHECK(predicted_center_dim(DisjointShape{path_graph(3), path_graph(5)}) == 4);
    CHECK(center_basis(disjoint_union(path_graph(3), path_graph(5))).size() == 4);

    CHECK_THROWS_AS(predicted_center_dim(GluedPathsShape{3, 3, 1}), Error); // endpoint attach
    CHECK_THROWS_AS(predicted_center_dim(PathShape{0}), Error);
}

TEST_CASE("glued path centers match the parity prediction") {
    for (int n = 3; n <= 7; ++n)
        for (int m = 1; m <= 7; ++m)
            for (int attach = 2; attach <= n - 1; ++attach) {
                OrientedGraph g = glued_paths_graph(n, m, attach);
                CHECK(static_cast<int>(center_basis(g).size()) ==
                      predicted_center_dim(GluedPathsShape{n, m, attach}));
            }
}

TEST_CASE("disjoint unions multiply center dimensions and split supports") {
    std::mt19937 rng(103);
    for (int round = 0; round < 25; ++round) {
        OrientedGraph g1 = random_graph(rng, 5);
        OrientedGraph g2 = random_graph(rng, 5);
        auto c1 = center_basis(g1);
        auto c2 = center_basis(g2);
        auto cu = center_basis(disjoint_union(g1, g2));
        CHECK(cu.size() == c1.size() * c2.size());

        // every union support splits into central halves and vice versa
        std::uint64_t low_mask = (std::uint64_t{1} << g1.vertex_count()) - 1;
        for (std::uint64_t support : cu) {
            CHECK(is_central_monomial(g1, support & low_mask));
            CHECK(is_central_monomial(g2, support >> g1.vertex_count()));
        }
        for (std::uint64_t a : c1)
            for (std::uint64_t b : c2)
                CHECK(std::find(cu.begin(), cu.end(),
                                a | (b << g1.vertex_count())) != cu.end());
    }
}

TEST_CASE("tree clause checks name the violated conditions") {
    OrientedGraph p5 = path_graph(5);
    CHECK(tree_central_support_check(p5, bits({1, 3, 5})).empty());

    auto adjacency = tree_central_support_check(p5, bits({2, 3}));
    CHECK(std::find(adjacency.begin(), adjacency.end(), TreeClause::adjacency) !=
          adjacency.end());

    auto leaf = tree_central_support_check(p5, bits({2, 4}));
    CHECK(leaf == std::vector<TreeClause>{TreeClause::leaf_membership});

    CHECK_THROWS_AS(tree_central_support_check(cycle_graph(3), bits({1})), Error);
    CHECK_THROWS_AS(tree_central_support_check(p5, 0), Error);
}

TEST_CASE("central tree supports contain two leaves at even distance") {
    std::mt19937 rng(107);
    for (int round = 0; round < 40; ++round) {
        // random tree on 2..9 vertices via random attachment
        std::uniform_int_distribution<int> size_dist(2, 9);
        int nv = size_dist(rng);
        std::vector<Edge> edges;
        for (int v = 1; v < nv; ++v) {
            std::uniform_int_distribution<int> parent_dist(0, v - 1);
            edges.push_back({parent_dist(rng), v});
        }
        OrientedGraph tree{nv, std::move(edges)};

        // tree BFS distances from a start vertex
        auto distances_from = [&](int start) {
            std::vector<int> dist(static_cast<std::size_t>(tree.vertex_count()), -1);
            std::vector<int> frontier{start};
            dist[static_cast<std::size_t>(start)] = 0;
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int v : frontier)
                    for (int e : tree.incident_edges()[static_cast<std::size_t>(v)]) {
                        int w = tree.edge(e).tail == v ? tree.edge(e).head : tree.edge(e).tail;
                        if (dist[static_cast<std::size_t>(w)] < 0) {
                            dist[static_cast<std::size_t>(w)] =
                                dist[static_cast<std::size_t>(v)] + 1;
                            next.push_back(w);
                        }
                    }
                frontier = std::move(next);
            }
            return dist;
        };

        for (std::uint64_t support : center_basis(tree)) {
            if (support == 0) continue;
            CHECK(tree_central_support_check(tree, support).empty());
            // collect support leaves and verify an even-distance pair exists
            std::vector<int> leaves;
            for (int v = 0; v < nv; ++v)
                if ((support & (std::uint64_t{1} << v)) && tree.degree(v) == 1)
                    leaves.push_back(v);
            CHECK(leaves.size() >= 2);
            bool even_pair = false;
            for (std::size_t i = 0; i < leaves.size() && !even_pair; ++i) {
                std::vector<int> dist = distances_from(leaves[i]);
                for (std::size_t j = i + 1; j < leaves.size() && !even_pair; ++j)
                    even_pair = dist[static_cast<std::size_t>(leaves[j])] % 2 == 0;
            }
            CHECK(even_pair);
        }
    }
}

TEST_CASE("monomial rendering uses 1-based generator labels") {
    CHECK(monomial_to_string(0) == "1");
    CHECK(monomial_to_string(bits({1, 3, 5})) == "e1 e3 e5");
}
