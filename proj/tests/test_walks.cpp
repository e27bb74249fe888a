#include "graphdirac/walks.hpp"

#include "graphdirac/error.hpp"
#include "graphdirac/linops.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

using namespace graphdirac;
using namespace graphdirac::testing;

namespace {

IntMatrix int_block_operator(const OrientedGraph& g) {
    return walk_count_matrix(g, 1);
}

// independent oracle: one depth-first sweep accumulating the signed count of
// length-k walks from `from` into every endpoint
std::vector<long long> signed_sums_from(const OrientedGraph& g, WalkElement from, int k) {
    int dim = g.vertex_count() + g.edge_count();
    std::vector<long long> sums(static_cast<std::size_t>(dim), 0);
    auto slot = [&](WalkElement x) {
        return x.tag == WalkTag::vertex ? x.index : g.vertex_count() + x.index;
    };
    auto dfs = [&](auto&& self, WalkElement at, int remaining, int sign) -> void {
        if (remaining == 0) {
            sums[static_cast<std::size_t>(slot(at))] += sign;
            return;
        }
        if (at.tag == WalkTag::vertex) {
            for (int e : g.incident_edges()[static_cast<std::size_t>(at.index)])
                self(self, {WalkTag::edge, e}, remaining - 1,
                     sign * step_sign(g, at, {WalkTag::edge, e}));
        } else {
            const Edge& e = g.edge(at.index);
            for (int v : {e.tail, e.head})
                self(self, {WalkTag::vertex, v}, remaining - 1,
                     sign * step_sign(g, at, {WalkTag::vertex, v}));
        }
    };
    dfs(dfs, from, k, 1);
    return sums;
}

} // namespace

TEST_CASE("step signs follow the edge orientation at the shared vertex") {
    OrientedGraph p2{2, {{0, 1}}};
    CHECK(step_sign(p2, {WalkTag::vertex, 0}, {WalkTag::edge, 0}) == -1);
    CHECK(step_sign(p2, {WalkTag::vertex, 1}, {WalkTag::edge, 0}) == 1);
    // direction of travel does not matter
    CHECK(step_sign(p2, {WalkTag::edge, 0}, {WalkTag::vertex, 0}) == -1);

    OrientedGraph p3 = path_graph(3);
    CHECK_THROWS_AS(step_sign(p3, {WalkTag::vertex, 0}, {WalkTag::edge, 1}), Error);
    CHECK_THROWS_AS(step_sign(p3, {WalkTag::vertex, 0}, {WalkTag::vertex, 1}), Error);
}

TEST_CASE("triangle walks of length three cancel toward the opposite edge") {
    OrientedGraph k3 = k3_opposite_edges();
    auto to_e1 = enumerate_signed_walks(k3, {WalkTag::vertex, 0}, {WalkTag::edge, 0}, 3);
    REQUIRE(to_e1.size() == 2);
    CHECK(to_e1[0].sign + to_e1[1].sign == 0);

    // full listing of the eight length-3 walks leaving v1, by endpoint
    std::map<std::string, int> expected{
        {"v1 -> e2 -> v3 -> e1  sgn=-1", -1}, {"v1 -> e3 -> v2 -> e1  sgn=1", 1},
        {"v1 -> e2 -> v3 -> e2  sgn=1", 1},   {"v1 -> e2 -> v1 -> e2  sgn=1", 1},
        {"v1 -> e3 -> v1 -> e2  sgn=1", 1},   {"v1 -> e3 -> v2 -> e3  sgn=-1", -1},
        {"v1 -> e3 -> v1 -> e3  sgn=-1", -1}, {"v1 -> e2 -> v1 -> e3  sgn=-1", -1},
    };
    std::map<std::string, int> seen;
    for (int e = 0; e < 3; ++e)
        for (const auto& walk :
             enumerate_signed_walks(k3, {WalkTag::vertex, 0}, {WalkTag::edge, e}, 3))
            seen[walk_to_string(walk)] = walk.sign;
    CHECK(seen == expected);
}

TEST_CASE("degenerate walk enumerations") {
    OrientedGraph p3 = path_graph(3);
    auto trivial = enumerate_signed_walks(p3, {WalkTag::vertex, 1}, {WalkTag::vertex, 1}, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].sign == 1);
    CHECK(trivial[0].steps.size() == 1);

    CHECK(enumerate_signed_walks(p3, {WalkTag::vertex, 0}, {WalkTag::vertex, 1}, 0).empty());
    CHECK(enumerate_signed_walks(p3, {WalkTag::vertex, 0}, {WalkTag::edge, 1}, 1).empty());
    CHECK_THROWS_AS(enumerate_signed_walks(p3, {WalkTag::vertex, 0}, {WalkTag::edge, 0}, -1),
                    Error);
}

TEST_CASE("walk listings come out in depth-first index order") {
    OrientedGraph k3 = k3_opposite_edges();
    auto walks = enumerate_signed_walks(k3, {WalkTag::vertex, 0}, {WalkTag::edge, 1}, 3);
    REQUIRE(walks.size() == 3);
    CHECK(walk_to_string(walks[0]) == "v1 -> e2 -> v1 -> e2  sgn=1");
    CHECK(walk_to_string(walks[1]) == "v1 -> e2 -> v3 -> e2  sgn=1");
    CHECK(walk_to_string(walks[2]) == "v1 -> e3 -> v1 -> e2  sgn=1");
}

TEST_CASE("third power of the triangle block operator matches the worked matrix") {
    IntMatrix cube = walk_count_matrix(k3_opposite_edges(), 3);
    long long expected[6][6] = {
        {0, 0, 0, 0, 3, -3}, {0, 0, 0, -3, 0, 3}, {0, 0, 0, 3, -3, 0},
        {0, -3, 3, 0, 0, 0}, {3, 0, -3, 0, 0, 0}, {-3, 3, 0, 0, 0, 0},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(cube(i, j) == expected[i][j]);
}

TEST_CASE("power zero and two have the expected block structure") {
    OrientedGraph g = k3_opposite_edges();
    CHECK(walk_count_matrix(g, 0) == IntMatrix::identity(6));

    IntMatrix square = walk_count_matrix(g, 2);
    Matrix even = even_laplacian(g);
    Matrix odd = odd_laplacian(g);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(static_cast<double>(square(i, j)) == even(i, j));
            CHECK(static_cast<double>(square(3 + i, 3 + j)) == odd(i, j));
            CHECK(square(i, 3 + j) == 0);
            CHECK(square(3 + i, j) == 0);
        }
}

TEST_CASE("entries of operator powers are exhaustive signed walk sums") {
    std::mt19937 rng(83);
    std::vector<OrientedGraph> corpus{path_graph(4), cycle_graph(4), k3_opposite_edges(),
                                      complete_graph(4), random_graph(rng, 5)};
    for (const auto& g : corpus) {
        int dim = g.vertex_count() + g.edge_count();
        for (int k = 0; k <= 4; ++k) {
            IntMatrix power = walk_count_matrix(g, k);
            for (int i = 0; i < dim; ++i) {
                WalkElement from = i < g.vertex_count()
                                       ? WalkElement{WalkTag::vertex, i}
                                       : WalkElement{WalkTag::edge, i - g.vertex_count()};
                std::vector<long long> sums = signed_sums_from(g, from, k);
                for (int j = 0; j < dim; ++j) {
                    CHECK(power(i, j) == sums[static_cast<std::size_t>(j)]);
                    // parity: odd powers vanish on same-tag blocks, even on mixed
                    bool i_vertex = i < g.vertex_count();
                    bool j_vertex = j < g.vertex_count();
                    if ((k % 2 == 0) == (i_vertex != j_vertex)) CHECK(power(i, j) == 0);
                }
            }
        }
    }
}

TEST_CASE("per-pair enumeration agrees with the one-sweep sums") {
    OrientedGraph g = cycle_graph(4);
    for (int k = 0; k <= 3; ++k) {
        std::vector<long long> sums = signed_sums_from(g, {WalkTag::vertex, 2}, k);
        for (int j = 0; j < g.edge_count(); ++j) {
            long long total = 0;
            for (const auto& walk :
                 enumerate_signed_walks(g, {WalkTag::vertex, 2}, {WalkTag::edge, j}, k))
                total += walk.sign;
            CHECK(total == sums[static_cast<std::size_t>(g.vertex_count() + j)]);
        }
    }
}

TEST_CASE("block operator of length one is the signed incidence structure") {
    OrientedGraph g = inward_p3();
    IntMatrix base = int_block_operator(g);
    Matrix dirac = incidence_dirac(g);
    for (int i = 0; i < base.rows(); ++i)
        for (int j = 0; j < base.cols(); ++j)
            CHECK(static_cast<double>(base(i, j)) == dirac(i, j));
}
