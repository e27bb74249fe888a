#include "graphdirac/walks.hpp"

#include "graphdirac/error.hpp"

#include <algorithm>

namespace graphdirac {

namespace {

void check_element(const OrientedGraph& g, WalkElement x) {
    int bound = x.tag == WalkTag::vertex ? g.vertex_count() : g.edge_count();
    if (x.index < 0 || x.index >= bound) throw Error("walks: element index out of range");
}

// Incident successors of x, ascending by index. Walks alternate tags, so the
// successors of a vertex are edges and vice versa.
std::vector<WalkElement> successors(const OrientedGraph& g, WalkElement x) {
    std::vector<WalkElement> out;
    if (x.tag == WalkTag::vertex) {
        for (int e : g.incident_edges()[static_cast<std::size_t>(x.index)])
            out.push_back({WalkTag::edge, e});
        std::sort(out.begin(), out.end(),
                  [](const WalkElement& a, const WalkElement& b) { return a.index < b.index; });
    } else {
        const Edge& e = g.edge(x.index);
        out.push_back({WalkTag::vertex, std::min(e.tail, e.head)});
        out.push_back({WalkTag::vertex, std::max(e.tail, e.head)});
    }
    return out;
}

} // namespace

int step_sign(const OrientedGraph& g, WalkElement a, WalkElement b) {
    check_element(g, a);
    check_element(g, b);
    if (a.tag == b.tag) throw Error("step_sign: steps must alternate vertex and edge");
    const WalkElement& vertex = a.tag == WalkTag::vertex ? a : b;
    const WalkElement& edge = a.tag == WalkTag::edge ? a : b;
    const Edge& e = g.edge(edge.index);
    if (e.tail == vertex.index) return -1; // edge originates from the vertex
    if (e.head == vertex.index) return 1;  // edge enters the vertex
    throw Error("step_sign: vertex and edge not incident");
}

std::vector<SignedWalk> enumerate_signed_walks(const OrientedGraph& g, WalkElement from,
                                               WalkElement to, int k) {
    check_element(g, from);
    check_element(g, to);
    if (k < 0) throw Error("enumerate_signed_walks: negative length");

    std::vector<SignedWalk> out;
    SignedWalk current;
    current.steps.push_back(from);
    current.sign = 1;

    auto dfs = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (current.steps.back() == to) out.push_back(current);
            return;
        }
        for (WalkElement next : successors(g, current.steps.back())) {
            int s = step_sign(g, current.steps.back(), next);
            current.steps.push_back(next);
            current.sign *= s;
            self(self, remaining - 1);
            current.sign *= s;
            current.steps.pop_back();
        }
    };
    dfs(dfs, k);
    return out;
}

IntMatrix walk_count_matrix(const OrientedGraph& g, int k) {
    if (k < 0) throw Error("walk_count_matrix: negative power");
    int nv = g.vertex_count();
    int ne = g.edge_count();
    IntMatrix base(nv + ne, nv + ne);
    for (int e = 0; e < ne; ++e) {
        base(g.edge(e).tail, nv + e) = -1;
        base(nv + e, g.edge(e).tail) = -1;
        base(g.edge(e).head, nv + e) = 1;
        base(nv + e, g.edge(e).head) = 1;
    }
    IntMatrix out = IntMatrix::identity(nv + ne);
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

std::string walk_to_string(const SignedWalk& walk) {
    std::string out;
    for (std::size_t i = 0; i < walk.steps.size(); ++i) {
        if (i > 0) out += " -> ";
        out += walk.steps[i].tag == WalkTag::vertex ? "v" : "e";
        out += std::to_string(walk.steps[i].index + 1);
    }
    out += "  sgn=";
    out += walk.sign > 0 ? "1" : "-1";
    return out;
}

} // namespace graphdirac
