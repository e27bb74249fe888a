#pragma once

#include "graphdirac/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace graphdirac {

/// Directed edge of an oriented graph: tail -> head.
struct Edge {
    int tail = 0;
    int head = 0;

    bool operator==(const Edge&) const = default;
};

/// Finite simple graph with a fixed orientation per edge. Immutable after
/// construction; the constructor rejects self-loops, parallel edges, and
/// out-of-range endpoints. Edge order is preserved as given, so every
/// derived matrix is reproducible.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(int vertex_count, std::vector<Edge> edges);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Edge ids incident to each vertex, in edge order.
    [[nodiscard]] const std::vector<std::vector<int>>& incident_edges() const {
        return incident_;
    }
    [[nodiscard]] bool adjacent(int u, int v) const;
    [[nodiscard]] int degree(int v) const {
        return static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }

    bool operator==(const OrientedGraph& rhs) const {
        return vertex_count_ == rhs.vertex_count_ && edges_ == rhs.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

/// Parse {"vertices": n, "edges": [[tail, head], ...]}; indices 0-based.
OrientedGraph parse_graph(const std::string& json_text);
std::string graph_to_json(const OrientedGraph& g);

/// Vertices of g2 re-indexed by g1.vertex_count; edge lists concatenated.
OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2);

/// Disjoint union plus one new edge per pair, oriented g1 -> g2.
OrientedGraph bridge_glue(const OrientedGraph& g1, const OrientedGraph& g2,
                          const std::vector<std::pair<int, int>>& pairs);

/// Merge g2 into g1 along an isomorphism of induced subgraphs
/// (iso: vertex of g1 -> vertex of g2). Interface edges keep g1's copy.
OrientedGraph interface_glue(const OrientedGraph& g1, const OrientedGraph& g2,
                             const std::map<int, int>& iso);

struct ComponentPartition {
    std::vector<int> component_of; // vertex -> component id
    int count = 0;                 // b_0
};

/// Component ids are contiguous and ordered by each component's smallest vertex.
ComponentPartition connected_components(const OrientedGraph& g);

/// +-1/0 edge coefficients of one cycle, signed by a traversal direction.
struct CycleBasisElement {
    std::vector<int> coefficients;

    bool operator==(const CycleBasisElement&) const = default;
};

/// Fundamental cycles of a depth-first spanning forest: one element per
/// non-tree edge, |E| - |V| + b_0 in total, each in the kernel of the
/// incidence matrix. Signs normalized so the first nonzero coefficient is +1.
std::vector<CycleBasisElement> cycle_basis(const OrientedGraph& g);

/// |V| x |E| matrix: +1 where an edge ends, -1 where it starts.
Matrix incidence_matrix(const OrientedGraph& g);

// Common fixtures.
OrientedGraph path_graph(int n);     // edges (i, i+1)
OrientedGraph cycle_graph(int n);    // edges (i, i+1 mod n), n >= 3
OrientedGraph complete_graph(int n); // edges (i, j), i < j, lexicographic

} // namespace graphdirac
