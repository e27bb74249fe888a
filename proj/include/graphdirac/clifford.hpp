#pragma once

#include "graphdirac/graph.hpp"
#include "graphdirac/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace graphdirac {

/// Scalar multiple of a generator product e_{i1} e_{i2} ... with ascending
/// indices; the support bit set records which generators appear. Generators
/// square to -1 and anticommute exactly across graph edges.
struct Monomial {
    std::uint64_t support = 0;
    Complex coefficient{1.0, 0.0};

    bool operator==(const Monomial&) const = default;
};

/// Finite sum of monomials, keyed by support; zero coefficients are dropped.
struct AlgebraElement {
    std::map<std::uint64_t, Complex> terms;

    void add_term(std::uint64_t support, Complex coefficient);
};

Monomial monomial_product(const OrientedGraph& g, const Monomial& a, const Monomial& b);
AlgebraElement element_product(const OrientedGraph& g, const AlgebraElement& a,
                               const AlgebraElement& b);

/// Parity test: central exactly when every vertex of g meets the support
/// through an even number of edges.
bool is_central_monomial(const OrientedGraph& g, std::uint64_t support);

/// All central supports, ascending by bit pattern (the empty support, i.e.
/// the identity, always included). Enumerates subsets; |V| <= 30.
std::vector<std::uint64_t> center_basis(const OrientedGraph& g);

/// Independent check: supports whose monomial commutes with every generator
/// under direct products, with no parity shortcut. |V| <= 14.
std::vector<std::uint64_t> center_oracle(const OrientedGraph& g);

// Shapes with a theorem-predicted center dimension.
struct PathShape {
    int n = 1;
};
struct DisjointShape {
    OrientedGraph g1;
    OrientedGraph g2;
};
struct GluedPathsShape {
    int n = 1;      // first path; the bridge leaves one of its interior vertices
    int m = 1;      // second path; the bridge arrives at its first vertex
    int attach = 2; // 1-based interior vertex of the first path
};
using CenterShape = std::variant<PathShape, DisjointShape, GluedPathsShape>;

/// Dimension predicted by the matching theorem: paths are 1 (even) or 2
/// (odd); disjoint unions multiply; bridge-glued paths are 1, 2, or 4 by the
/// parities of the two lengths.
int predicted_center_dim(const CenterShape& shape);

/// The graph of GluedPathsShape: P_n with vertices 1..n, P_m appended, and a
/// bridge from the attach vertex to the first vertex of P_m.
OrientedGraph glued_paths_graph(int n, int m, int attach);

enum class TreeClause {
    leaf_membership, // support contains no degree-one vertex
    distance_two,    // some support vertex has no companion at distance 2
    adjacency        // two support vertices are adjacent
};

/// Necessary conditions for a central support on a tree; returns the
/// violated clauses (empty for every central support; possibly empty for a
/// non-central one, the clauses are not sufficient).
std::vector<TreeClause> tree_central_support_check(const OrientedGraph& g, std::uint64_t support);

/// "e1 e3 e5" with 1-based labels; the empty support renders as "1".
std::string monomial_to_string(std::uint64_t support);

} // namespace graphdirac
