#include "graphdirac/dimer.hpp"

#include "graphdirac/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace graphdirac {

namespace {

void check_k(int k) {
    if (k != 2 && k != 3 && k != 4)
        throw Error("tiling: unsupported row count k=" + std::to_string(k) +
                    " (recurrences cover k in {2,3,4})");
}

// T_k(n) extended with T_k(-1) = 0, which every recurrence is consistent with.
BigInt tiling_ext(int k, int n) {
    if (n < -1) throw Error("tiling: index below -1");
    if (n == -1) return BigInt(0);
    return tiling_count(k, n);
}

// Number of tilings of L_{4,n} missing the middle two vertices of an end
// column: sum of T4(n - 2i) for i = 1..floor(n/2).
BigInt t4_mid_column_count(int n) {
    BigInt sum(0);
    for (int i = 1; 2 * i <= n; ++i) sum += tiling_count(4, n - 2 * i);
    return sum;
}

// (T3(x+1) - T3(x-1)) / 2: tilings of L_{3,x} missing one corner vertex.
BigInt t3_corner_count(int x) {
    return (tiling_ext(3, x + 1) - tiling_ext(3, x - 1)).div_exact(2);
}

// (T3(x) - T3(x-2)) / 2: tilings of L_{3,x} missing a corner and the middle
// vertex next to it.
BigInt t3_corner_mid_count(int x) {
    return (tiling_ext(3, x) - tiling_ext(3, x - 2)).div_exact(2);
}

// (T4(x+1) - T4(x-2)) / 5: tilings of L_{4,x} missing a corner vertex and
// the vertex beside it.
BigInt t4_corner_pair_count(int x) {
    return (tiling_ext(4, x + 1) - tiling_ext(4, x - 2)).div_exact(5);
}

} // namespace

LatticeGraph lattice(int k, int n) {
    if (k < 1 || n < 1) throw Error("lattice: dimensions must be at least 1");
    LatticeGraph out;
    out.rows = k;
    out.cols = n;
    std::vector<Edge> edges;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) {
            out.coords.emplace_back(r, c);
            if (c + 1 < n) {
                edges.push_back({out.vertex_at(r, c), out.vertex_at(r, c + 1)});
                out.edge_kinds.push_back(LatticeEdgeKind::horizontal);
            }
            if (r + 1 < k) {
                edges.push_back({out.vertex_at(r, c), out.vertex_at(r + 1, c)});
                out.edge_kinds.push_back(LatticeEdgeKind::vertical);
            }
        }
    out.graph = OrientedGraph(k * n, std::move(edges));
    return out;
}

ComplexMatrix kasteleyn_matrix(const LatticeGraph& l) {
    int n = l.graph.vertex_count();
    ComplexMatrix out(n, n);
    for (int e = 0; e < l.graph.edge_count(); ++e) {
        Complex w = l.edge_kinds[static_cast<std::size_t>(e)] == LatticeEdgeKind::horizontal
                        ? Complex{1.0, 0.0}
                        : Complex{0.0, 1.0};
        out(l.graph.edge(e).tail, l.graph.edge(e).head) = w;
        out(l.graph.edge(e).head, l.graph.edge(e).tail) = w;
    }
    return out;
}

BigInt kasteleyn_det_abs2(const LatticeGraph& l) {
    int n = l.graph.vertex_count();
    std::vector<GaussInt> entries(static_cast<std::size_t>(n) * n);
    for (int e = 0; e < l.graph.edge_count(); ++e) {
        GaussInt w = l.edge_kinds[static_cast<std::size_t>(e)] == LatticeEdgeKind::horizontal
                         ? GaussInt{1, 0}
                         : GaussInt{0, 1};
        int a = l.graph.edge(e).tail;
        int b = l.graph.edge(e).head;
        entries[static_cast<std::size_t>(a) * n + b] = w;
        entries[static_cast<std::size_t>(b) * n + a] = w;
    }
    return gauss_det_abs2(std::move(entries), n);
}

BigInt count_matchings_brute(const OrientedGraph& g, const std::vector<int>& forced_edges,
                             const std::vector<int>& forbidden_vertices) {
    int nv = g.vertex_count();
    std::vector<bool> covered(static_cast<std::size_t>(nv), false);
    for (int v : forbidden_vertices) {
        if (v < 0 || v >= nv) throw Error("count_matchings_brute: forbidden vertex out of range");
        covered[static_cast<std::size_t>(v)] = true;
    }
    for (int e : forced_edges) {
        if (e < 0 || e >= g.edge_count())
            throw Error("count_matchings_brute: forced edge out of range");
        int a = g.edge(e).tail;
        int b = g.edge(e).head;
        if (covered[static_cast<std::size_t>(a)] || covered[static_cast<std::size_t>(b)])
            return BigInt(0); // forced edge clashes with a removed/matched vertex
        covered[static_cast<std::size_t>(a)] = true;
        covered[static_cast<std::size_t>(b)] = true;
    }

    long long count = 0;
    auto dfs = [&](auto&& self, int from) -> void {
        int v = from;
        while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
        if (v == nv) {
            ++count;
            return;
        }
        covered[static_cast<std::size_t>(v)] = true;
        for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
            int u = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
            if (covered[static_cast<std::size_t>(u)]) continue;
            covered[static_cast<std::size_t>(u)] = true;
            self(self, v + 1);
            covered[static_cast<std::size_t>(u)] = false;
        }
        covered[static_cast<std::size_t>(v)] = false;
    };
    dfs(dfs, 0);
    return BigInt(count);
}

BigInt tiling_count(int k, int n) {
    check_k(k);
    if (n < 0) throw Error("tiling_count: negative column count");
    std::vector<BigInt> seq;
    switch (k) {
    case 2:
        seq = {BigInt(1), BigInt(1), BigInt(2)};
        for (int i = 3; i <= n; ++i)
            seq.push_back(seq[static_cast<std::size_t>(i - 1)] + seq[static_cast<std::size_t>(i - 2)]);
        break;
    case 3:
        seq = {BigInt(1), BigInt(0), BigInt(3), BigInt(0)};
        for (int i = 4; i <= n; ++i)
            seq.push_back(BigInt(4) * seq[static_cast<std::size_t>(i - 2)] -
                          seq[static_cast<std::size_t>(i - 4)]);
        break;
    default:
        seq = {BigInt(1), BigInt(1), BigInt(5), BigInt(11), BigInt(36)};
        for (int i = 5; i <= n; ++i)
            seq.push_back(seq[static_cast<std::size_t>(i - 1)] +
                          BigInt(5) * seq[static_cast<std::size_t>(i - 2)] +
                          seq[static_cast<std::size_t>(i - 3)] - seq[static_cast<std::size_t>(i - 4)]);
        break;
    }
    return seq[static_cast<std::size_t>(n)];
}

namespace {

double ipow(double base, int exp) {
    double out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

} // namespace

double tiling_closed(int k, int n) {
    if (n < 0) throw Error("tiling_closed: negative column count");
    if (k == 3) {
        double alpha = (std::sqrt(2.0) + std::sqrt(6.0)) / 2.0;
        double parity = (n + 1) % 2 == 0 ? 1.0 : -1.0; // (-1)^(n+1)
        return (1.0 - parity) * (ipow(alpha, n + 1) + ipow(1.0 / alpha, n + 1)) /
               (2.0 * std::sqrt(6.0));
    }
    if (k == 4) {
        double r29 = std::sqrt(29.0);
        double a = (1.0 + r29 + std::sqrt(14.0 + 2.0 * r29)) / 4.0;
        double b = (1.0 - r29 - std::sqrt(14.0 - 2.0 * r29)) / 4.0;
        double denom_b = (1.0 - 1.0 / (b * b)) * (1.0 - b / a) * (1.0 - a * b);
        double denom_a = (1.0 - 1.0 / (a * a)) * (1.0 - a / b) * (1.0 - a * b);
        return (6.0 / b + 5.0 - 1.0 / (b * b * b)) / denom_b * ipow(b, n) -
               (6.0 * b + 5.0 - b * b * b) / denom_b * ipow(1.0 / b, n) +
               (6.0 / a + 5.0 - 1.0 / (a * a * a)) / denom_a * ipow(a, n) -
               (6.0 * a + 5.0 - a * a * a) / denom_a * ipow(1.0 / a, n);
    }
    throw Error("tiling_closed: closed forms cover k in {3,4}");
}

SumIdentity partial_sums(int k, SumVariant variant, int n) {
    SumIdentity out;
    switch (variant) {
    case SumVariant::even_columns: {
        if (k != 3) throw Error("partial_sums: even_columns variant needs k=3");
        if (n < 2 || n % 2 != 0) throw Error("partial_sums: even_columns variant needs even n >= 2");
        for (int i = 0; 2 * i <= n - 2; ++i) out.direct += tiling_count(3, 2 * i);
        out.closed = (tiling_count(3, n) - tiling_count(3, n - 2)).div_exact(2);
        break;
    }
    case SumVariant::consecutive: {
        if (k != 4) throw Error("partial_sums: consecutive variant needs k=4");
        if (n < 2) throw Error("partial_sums: consecutive variant needs n >= 2");
        for (int i = 0; i <= n - 2; ++i) out.direct += tiling_count(4, i);
        out.closed = (tiling_count(4, n) - tiling_ext(4, n - 3)).div_exact(5);
        break;
    }
    case SumVariant::alternating: {
        if (k != 4) throw Error("partial_sums: alternating variant needs k=4");
        if (n < 4) throw Error("partial_sums: alternating variant needs n >= 4");
        out.direct = t4_mid_column_count(n);
        out.closed = (BigInt(-2) * tiling_count(4, n) + BigInt(20) * tiling_count(4, n - 2) +
                      BigInt(7) * tiling_count(4, n - 3) - BigInt(5) * tiling_count(4, n - 4))
                         .div_exact(5);
        break;
    }
    }
    if (!(out.direct == out.closed))
        throw std::logic_error("partial_sums: identity violated (direct " + out.direct.str() +
                               " vs closed " + out.closed.str() + ")");
    return out;
}

void GluingSpec::validate() const {
    if (k < 1 || m < 1 || n < 1) throw Error("gluing: lattice dimensions must be at least 1");
    if (shift < 0 || shift > k - 1) throw Error("gluing: shift must lie in [0, k-1]");
    std::set<int> seen;
    for (int label : bridges) {
        if (label < 1 || label > k - shift)
            throw Error("gluing: bridge label " + std::to_string(label) +
                        " outside overlap of height " + std::to_string(k - shift));
        if (!seen.insert(label).second) throw Error("gluing: duplicate bridge label");
    }
}

OrientedGraph glued_lattice(const GluingSpec& spec) {
    spec.validate();
    LatticeGraph left = lattice(spec.k, spec.m);
    LatticeGraph right = lattice(spec.k, spec.n);
    OrientedGraph joined = disjoint_union(left.graph, right.graph);
    std::vector<Edge> edges = joined.edges();
    int offset = left.graph.vertex_count();
    std::vector<int> labels = spec.bridges;
    std::sort(labels.begin(), labels.end());
    for (int label : labels)
        edges.push_back({left.vertex_at(spec.shift + label - 1, spec.m - 1),
                         offset + right.vertex_at(label - 1, 0)});
    return {joined.vertex_count(), std::move(edges)};
}

BigInt glued_tiling_count(const GluingSpec& spec) {
    spec.validate();
    check_k(spec.k);
    const int m = spec.m;
    const int n = spec.n;
    std::set<int> b(spec.bridges.begin(), spec.bridges.end());

    if (spec.k % 2 == 0 && b.size() % 2 == 1)
        return BigInt(0); // an odd seam leaves an odd number of vertices per side

    if (b.empty()) return tiling_count(spec.k, m) * tiling_count(spec.k, n);

    if (spec.k == 2) {
        // remaining case: shift 0, both bridges forced
        if (spec.shift == 0 && b == std::set<int>{1, 2})
            return tiling_ext(2, m - 1) * tiling_ext(2, n - 1);
        throw Error("glued_tiling_count: no closed case for this k=2 gluing");
    }

    if (spec.k == 3) {
        if (spec.shift == 2 && b == std::set<int>{1})
            return t3_corner_count(m) * t3_corner_count(n);
        if (spec.shift == 1) {
            if (b == std::set<int>{1} || b == std::set<int>{2}) return BigInt(0);
            if (b == std::set<int>{1, 2}) return t3_corner_mid_count(m) * t3_corner_mid_count(n);
        }
        if (spec.shift == 0) {
            if (b == std::set<int>{1} || b == std::set<int>{3})
                return t3_corner_count(m) * t3_corner_count(n);
            if (b == std::set<int>{2} || b == std::set<int>{1, 3}) return BigInt(0);
            if (b == std::set<int>{1, 2} || b == std::set<int>{2, 3})
                return t3_corner_mid_count(m) * t3_corner_mid_count(n);
            if (b == std::set<int>{1, 2, 3})
                return tiling_ext(3, m - 1) * tiling_ext(3, n - 1);
        }
        throw Error("glued_tiling_count: no closed case for this k=3 gluing");
    }

    // k == 4, |b| even and nonzero
    if (spec.shift == 2 && b == std::set<int>{1, 2})
        return t4_corner_pair_count(m) * t4_corner_pair_count(n);
    if (spec.shift == 1) {
        if (b == std::set<int>{1, 3}) return BigInt(0);
        if (b == std::set<int>{1, 2}) return t4_mid_column_count(m) * t4_corner_pair_count(n);
        if (b == std::set<int>{2, 3}) return t4_corner_pair_count(m) * t4_mid_column_count(n);
    }
    if (spec.shift == 0) {
        if (b == std::set<int>{1, 2} || b == std::set<int>{3, 4})
            return t4_corner_pair_count(m) * t4_corner_pair_count(n);
        if (b == std::set<int>{1, 3} || b == std::set<int>{2, 4}) return BigInt(0);
        if (b == std::set<int>{1, 4})
            return t4_mid_column_count(m + 1) * t4_mid_column_count(n + 1);
        if (b == std::set<int>{2, 3}) return t4_mid_column_count(m) * t4_mid_column_count(n);
        if (b == std::set<int>{1, 2, 3, 4})
            return tiling_ext(4, m - 1) * tiling_ext(4, n - 1);
    }
    throw Error("glued_tiling_count: no closed case for this k=4 gluing");
}

GluingIdentity gluing_identity_check(int k, int m, int n) {
    check_k(k);
    if (m < 1 || n < 1) throw Error("gluing_identity_check: m, n must be at least 1");
    GluingIdentity out;
    for (int mask = 0; mask < (1 << k); ++mask) {
        GluingSpec spec;
        spec.k = k;
        spec.m = m;
        spec.n = n;
        spec.shift = 0;
        for (int label = 1; label <= k; ++label)
            if (mask & (1 << (label - 1))) spec.bridges.push_back(label);
        out.case_sum += glued_tiling_count(spec);
    }
    out.direct = tiling_count(k, m + n);
    if (!(out.case_sum == out.direct))
        throw std::logic_error("gluing_identity_check: case sum " + out.case_sum.str() +
                               " differs from T_" + std::to_string(k) + "(" +
                               std::to_string(m + n) + ") = " + out.direct.str());
    return out;
}

} // namespace graphdirac
