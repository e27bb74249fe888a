#include "graphdirac/graph.hpp"

#include "graphdirac/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace graphdirac {

OrientedGraph::OrientedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw Error("graph: negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& [tail, head] = edges_[e];
        std::string where = "edge " + std::to_string(e);
        if (tail < 0 || tail >= vertex_count_ || head < 0 || head >= vertex_count_)
            throw Error("graph: " + where + ": vertex index out of range (" +
                        std::to_string(tail) + " -> " + std::to_string(head) + ")");
        if (tail == head)
            throw Error("graph: " + where + ": self-loop at vertex " + std::to_string(tail));
        auto key = std::minmax(tail, head);
        if (!seen.insert(key).second)
            throw Error("graph: " + where + ": duplicate edge {" + std::to_string(key.first) +
                        "," + std::to_string(key.second) + "}");
    }
    incident_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        incident_[static_cast<std::size_t>(edges_[e].tail)].push_back(static_cast<int>(e));
        incident_[static_cast<std::size_t>(edges_[e].head)].push_back(static_cast<int>(e));
    }
}

bool OrientedGraph::adjacent(int u, int v) const {
    for (int e : incident_[static_cast<std::size_t>(u)])
        if (edges_[static_cast<std::size_t>(e)].tail == v ||
            edges_[static_cast<std::size_t>(e)].head == v)
            return true;
    return false;
}

OrientedGraph parse_graph(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw Error("graph JSON: expected object with \"vertices\" and \"edges\"");
    if (!doc["vertices"].is_number_integer() || doc["vertices"].get<long long>() < 0)
        throw Error("graph JSON: \"vertices\" must be a non-negative integer");
    if (!doc["edges"].is_array()) throw Error("graph JSON: \"edges\" must be an array");

    int vertex_count = doc["vertices"].get<int>();
    std::vector<Edge> edges;
    edges.reserve(doc["edges"].size());
    for (std::size_t e = 0; e < doc["edges"].size(); ++e) {
        const auto& pair = doc["edges"][e];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            throw Error("graph JSON: edge " + std::to_string(e) +
                        ": expected [tail, head] integer pair");
        edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    return {vertex_count, std::move(edges)};
}

std::string graph_to_json(const OrientedGraph& g) {
    nlohmann::json doc;
    doc["vertices"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) doc["edges"].push_back({e.tail, e.head});
    return doc.dump();
}

OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2) {
    std::vector<Edge> edges = g1.edges();
    int offset = g1.vertex_count();
    for (const auto& e : g2.edges()) edges.push_back({e.tail + offset, e.head + offset});
    return {g1.vertex_count() + g2.vertex_count(), std::move(edges)};
}

OrientedGraph bridge_glue(const OrientedGraph& g1, const OrientedGraph& g2,
                          const std::vector<std::pair<int, int>>& pairs) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= g1.vertex_count() || b < 0 || b >= g2.vertex_count())
            throw Error("bridge_glue: bridge endpoint out of range");
        if (!seen.insert({a, b}).second) throw Error("bridge_glue: duplicate bridge pair");
    }
    std::vector<Edge> edges = disjoint_union(g1, g2).edges();
    int offset = g1.vertex_count();
    for (const auto& [a, b] : pairs) edges.push_back({a, b + offset});
    return {g1.vertex_count() + g2.vertex_count(), std::move(edges)};
}

OrientedGraph interface_glue(const OrientedGraph& g1, const OrientedGraph& g2,
                             const std::map<int, int>& iso) {
    if (iso.empty()) throw Error("interface_glue: empty interface (use disjoint_union)");
    std::set<int> range;
    for (const auto& [a, b] : iso) {
        if (a < 0 || a >= g1.vertex_count() || b < 0 || b >= g2.vertex_count())
            throw Error("interface_glue: vertex out of range");
        if (!range.insert(b).second) throw Error("interface_glue: map is not injective");
    }
    for (const auto& [a1, b1] : iso)
        for (const auto& [a2, b2] : iso) {
            if (a1 >= a2) continue;
            if (g1.adjacent(a1, a2) != g2.adjacent(b1, b2))
                throw Error("interface_glue: map does not preserve adjacency");
        }

    // g1 keeps its ids; g2 vertices outside the interface get fresh ids.
    std::vector<int> remap(static_cast<std::size_t>(g2.vertex_count()), -1);
    for (const auto& [a, b] : iso) remap[static_cast<std::size_t>(b)] = a;
    int next = g1.vertex_count();
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (remap[static_cast<std::size_t>(v)] < 0) remap[static_cast<std::size_t>(v)] = next++;

    std::vector<Edge> edges = g1.edges();
    for (const auto& e : g2.edges()) {
        bool interior = range.contains(e.tail) && range.contains(e.head);
        if (interior) continue; // duplicate of the g1 interface copy
        edges.push_back(
            {remap[static_cast<std::size_t>(e.tail)], remap[static_cast<std::size_t>(e.head)]});
    }
    return {next, std::move(edges)};
}

ComponentPartition connected_components(const OrientedGraph& g) {
    ComponentPartition out;
    out.component_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (out.component_of[static_cast<std::size_t>(start)] >= 0) continue;
        int id = out.count++;
        std::vector<int> stack{start};
        out.component_of[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
                int w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
                if (out.component_of[static_cast<std::size_t>(w)] < 0) {
                    out.component_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

namespace {

// Iterative DFS from the smallest unvisited vertex; records each vertex's
// parent tree edge so fundamental-cycle paths can be walked back to the root.
struct SpanningForest {
    std::vector<bool> edge_in_tree;
    std::vector<int> parent_edge; // per vertex, -1 at roots
    std::vector<int> parent;      // per vertex, -1 at roots
    std::vector<int> depth;
};

SpanningForest spanning_forest(const OrientedGraph& g) {
    SpanningForest f;
    f.edge_in_tree.assign(static_cast<std::size_t>(g.edge_count()), false);
    f.parent_edge.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    f.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    f.depth.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (visited[static_cast<std::size_t>(root)]) continue;
        std::vector<int> stack{root};
        visited[static_cast<std::size_t>(root)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
                int w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
                if (visited[static_cast<std::size_t>(w)]) continue;
                visited[static_cast<std::size_t>(w)] = true;
                f.edge_in_tree[static_cast<std::size_t>(e)] = true;
                f.parent[static_cast<std::size_t>(w)] = v;
                f.parent_edge[static_cast<std::size_t>(w)] = e;
                f.depth[static_cast<std::size_t>(w)] = f.depth[static_cast<std::size_t>(v)] + 1;
                stack.push_back(w);
            }
        }
    }
    return f;
}

} // namespace

std::vector<CycleBasisElement> cycle_basis(const OrientedGraph& g) {
    SpanningForest forest = spanning_forest(g);
    std::vector<CycleBasisElement> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (forest.edge_in_tree[static_cast<std::size_t>(e)]) continue;
        CycleBasisElement cycle;
        cycle.coefficients.assign(static_cast<std::size_t>(g.edge_count()), 0);
        cycle.coefficients[static_cast<std::size_t>(e)] = 1;
        // close the cycle along tree paths: head -> lca and lca -> tail,
        // walked in the traversal direction tail -> (e) -> head -> ... -> tail
        int a = g.edge(e).head;
        int b = g.edge(e).tail;
        while (a != b) {
            bool step_a = forest.depth[static_cast<std::size_t>(a)] >=
                          forest.depth[static_cast<std::size_t>(b)];
            int v = step_a ? a : b;
            int pe = forest.parent_edge[static_cast<std::size_t>(v)];
            int p = forest.parent[static_cast<std::size_t>(v)];
            // walking from head side we move v -> parent; from tail side the
            // cycle traverses parent -> v, so the sign flips
            bool along = step_a ? (g.edge(pe).tail == v) : (g.edge(pe).head == v);
            cycle.coefficients[static_cast<std::size_t>(pe)] = along ? 1 : -1;
            (step_a ? a : b) = p;
        }
        for (int& c : cycle.coefficients) {
            if (c == 0) continue;
            if (c < 0)
                for (int& x : cycle.coefficients) x = -x;
            break;
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Matrix incidence_matrix(const OrientedGraph& g) {
    Matrix out(g.vertex_count(), g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        out(g.edge(e).tail, e) = -1.0;
        out(g.edge(e).head, e) = 1.0;
    }
    return out;
}

OrientedGraph path_graph(int n) {
    if (n < 1) throw Error("path_graph: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return {n, std::move(edges)};
}

OrientedGraph cycle_graph(int n) {
    if (n < 3) throw Error("cycle_graph: need at least three vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return {n, std::move(edges)};
}

OrientedGraph complete_graph(int n) {
    if (n < 1) throw Error("complete_graph: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return {n, std::move(edges)};
}

} // namespace graphdirac
