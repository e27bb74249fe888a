#include "graphdirac/clifford.hpp"

#include "graphdirac/error.hpp"

#include <algorithm>
#include <queue>

namespace graphdirac {

namespace {

constexpr double kDropTol = 1e-15;

std::vector<int> support_indices(std::uint64_t support) {
    std::vector<int> out;
    for (int i = 0; support != 0; ++i, support >>= 1)
        if (support & 1) out.push_back(i);
    return out;
}

void check_support(const OrientedGraph& g, std::uint64_t support) {
    if (g.vertex_count() < 64 && (support >> g.vertex_count()) != 0)
        throw Error("clifford: support contains vertices outside the graph");
}

} // namespace

void AlgebraElement::add_term(std::uint64_t support, Complex coefficient) {
    auto it = terms.find(support);
    if (it == terms.end()) {
        if (std::abs(coefficient) > kDropTol) terms.emplace(support, coefficient);
        return;
    }
    it->second += coefficient;
    if (std::abs(it->second) <= kDropTol) terms.erase(it);
}

Monomial monomial_product(const OrientedGraph& g, const Monomial& a, const Monomial& b) {
    check_support(g, a.support);
    check_support(g, b.support);

    // Insert b's generators one by one into a's ascending list. Moving a
    // generator left past a larger one flips the sign exactly when the two
    // vertices are adjacent; meeting its own copy squares to -1 and both
    // vanish from the support.
    std::vector<int> list = support_indices(a.support);
    int sign = 1;
    for (int gen : support_indices(b.support)) {
        std::size_t pos = list.size();
        while (pos > 0 && list[pos - 1] > gen) {
            if (g.adjacent(list[pos - 1], gen)) sign = -sign;
            --pos;
        }
        if (pos > 0 && list[pos - 1] == gen) {
            sign = -sign;
            list.erase(list.begin() + static_cast<std::ptrdiff_t>(pos) - 1);
        } else {
            list.insert(list.begin() + static_cast<std::ptrdiff_t>(pos), gen);
        }
    }

    Monomial out;
    for (int i : list) out.support |= std::uint64_t{1} << i;
    out.coefficient = a.coefficient * b.coefficient * static_cast<double>(sign);
    return out;
}

AlgebraElement element_product(const OrientedGraph& g, const AlgebraElement& a,
                               const AlgebraElement& b) {
    AlgebraElement out;
    for (const auto& [sa, ca] : a.terms)
        for (const auto& [sb, cb] : b.terms) {
            Monomial prod = monomial_product(g, Monomial{sa, ca}, Monomial{sb, cb});
            out.add_term(prod.support, prod.coefficient);
        }
    return out;
}

bool is_central_monomial(const OrientedGraph& g, std::uint64_t support) {
    check_support(g, support);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int edges_into_support = 0;
        for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
            int w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
            if (support & (std::uint64_t{1} << w)) ++edges_into_support;
        }
        if (edges_into_support % 2 != 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> center_basis(const OrientedGraph& g) {
    if (g.vertex_count() > 30) throw Error("center_basis: graphs above 30 vertices unsupported");
    std::vector<std::uint64_t> out;
    std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t support = 0; support < limit; ++support)
        if (is_central_monomial(g, support)) out.push_back(support);
    return out;
}

std::vector<std::uint64_t> center_oracle(const OrientedGraph& g) {
    if (g.vertex_count() > 14) throw Error("center_oracle: graphs above 14 vertices unsupported");
    std::vector<std::uint64_t> out;
    std::uint64_t limit = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t support = 0; support < limit; ++support) {
        bool central = true;
        for (int i = 0; i < g.vertex_count() && central; ++i) {
            Monomial alpha{support, Complex{1.0, 0.0}};
            Monomial gen{std::uint64_t{1} << i, Complex{1.0, 0.0}};
            central = monomial_product(g, alpha, gen) == monomial_product(g, gen, alpha);
        }
        if (central) out.push_back(support);
    }
    return out;
}

OrientedGraph glued_paths_graph(int n, int m, int attach) {
    if (n < 3) throw Error("glued_paths_graph: first path needs an interior vertex (n >= 3)");
    if (m < 1) throw Error("glued_paths_graph: second path needs at least one vertex");
    if (attach < 2 || attach > n - 1)
        throw Error("glued_paths_graph: attach vertex must be interior (2..n-1)");
    return bridge_glue(path_graph(n), path_graph(m), {{attach - 1, 0}});
}

int predicted_center_dim(const CenterShape& shape) {
    if (const auto* path = std::get_if<PathShape>(&shape)) {
        if (path->n < 1) throw Error("predicted_center_dim: empty path");
        return path->n % 2 == 0 ? 1 : 2;
    }
    if (const auto* dis = std::get_if<DisjointShape>(&shape)) {
        return static_cast<int>(center_basis(dis->g1).size() * center_basis(dis->g2).size());
    }
    const auto& glued = std::get<GluedPathsShape>(shape);
    glued_paths_graph(glued.n, glued.m, glued.attach); // validates the shape
    bool n_odd = glued.n % 2 != 0;
    bool m_odd = glued.m % 2 != 0;
    if (n_odd && m_odd) {
        // An odd attach vertex re-glues as two even paths: the same graph is
        // the (attach+m)-path bridged to the (n-attach)-path at position
        // `attach`, which lands in the even/even case.
        return glued.attach % 2 == 0 ? 4 : 1;
    }
    if (!n_odd && !m_odd) return 1;
    return 2;
}

std::vector<TreeClause> tree_central_support_check(const OrientedGraph& g,
                                                   std::uint64_t support) {
    check_support(g, support);
    if (support == 0) throw Error("tree_central_support_check: empty support");
    ComponentPartition comps = connected_components(g);
    int b1 = g.edge_count() - g.vertex_count() + comps.count;
    if (comps.count != 1 || b1 != 0) throw Error("tree_central_support_check: graph is not a tree");

    std::vector<int> members = support_indices(support);
    std::vector<TreeClause> violated;

    bool has_leaf = std::any_of(members.begin(), members.end(),
                                [&](int v) { return g.degree(v) == 1; });
    if (!has_leaf) violated.push_back(TreeClause::leaf_membership);

    // BFS distances between support members (trees are small here)
    auto distance = [&](int from, int to) {
        std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
        std::queue<int> queue;
        dist[static_cast<std::size_t>(from)] = 0;
        queue.push(from);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            if (v == to) return dist[static_cast<std::size_t>(v)];
            for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
                int w = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push(w);
                }
            }
        }
        return -1;
    };

    bool distance_ok = true;
    for (int v : members) {
        bool found = false;
        for (int u : members)
            if (u != v && distance(u, v) == 2) {
                found = true;
                break;
            }
        if (!found) {
            distance_ok = false;
            break;
        }
    }
    if (!distance_ok) violated.push_back(TreeClause::distance_two);

    bool adjacent_pair = false;
    for (std::size_t i = 0; i < members.size() && !adjacent_pair; ++i)
        for (std::size_t j = i + 1; j < members.size() && !adjacent_pair; ++j)
            adjacent_pair = g.adjacent(members[i], members[j]);
    if (adjacent_pair) violated.push_back(TreeClause::adjacency);

    return violated;
}

std::string monomial_to_string(std::uint64_t support) {
    if (support == 0) return "1";
    std::string out;
    for (int i : support_indices(support)) {
        if (!out.empty()) out += " ";
        out += "e" + std::to_string(i + 1);
    }
    return out;
}

} // namespace graphdirac
