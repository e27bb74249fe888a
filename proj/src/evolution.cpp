#include "graphdirac/evolution.hpp"

#include "graphdirac/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace graphdirac {

namespace {

double norm2(const std::vector<Complex>& v) {
    double sum = 0.0;
    for (const Complex& z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

void check_operator_state(const Matrix& op, const StateVector& psi) {
    if (op.rows() != op.cols()) throw Error("evolution: operator not square");
    if (!op.is_symmetric()) throw Error("evolution: operator not symmetric");
    if (op.rows() != static_cast<int>(psi.values.size()))
        throw Error("evolution: operator/state dimension mismatch");
}

} // namespace

int state_dimension(const OrientedGraph& g, StateKind kind) {
    switch (kind) {
    case StateKind::vertex: return g.vertex_count();
    case StateKind::edge: return g.edge_count();
    case StateKind::vertex_edge: return g.vertex_count() + g.edge_count();
    }
    throw Error("state_dimension: unknown kind");
}

void EvolutionParams::validate() const {
    if (!(hbar > 0.0)) throw Error("evolution: hbar must be positive");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw Error("evolution: time grid not strictly increasing");
}

StateVector evolve_with_spectrum(const Spectrum& spec, const StateVector& psi0, double t,
                                 double hbar) {
    if (!(hbar > 0.0)) throw Error("evolution: hbar must be positive");
    int n = static_cast<int>(psi0.values.size());
    if (spec.eigenvectors.rows() != n) throw Error("evolution: operator/state dimension mismatch");

    // Q diag(exp(i lambda t / hbar)) Q^t psi
    std::vector<Complex> coeffs(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            coeffs[static_cast<std::size_t>(k)] += spec.eigenvectors(i, k) * psi0.values[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) {
        double phase = spec.eigenvalues[static_cast<std::size_t>(k)] * t / hbar;
        coeffs[static_cast<std::size_t>(k)] *= Complex{std::cos(phase), std::sin(phase)};
    }
    StateVector out;
    out.kind = psi0.kind;
    out.values.assign(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            out.values[static_cast<std::size_t>(i)] += spec.eigenvectors(i, k) * coeffs[static_cast<std::size_t>(k)];
    return out;
}

StateVector evolve(const Matrix& op, const StateVector& psi0, double t, double hbar) {
    check_operator_state(op, psi0);
    return evolve_with_spectrum(spectrum(op), psi0, t, hbar);
}

bool is_steady(const Matrix& op, const StateVector& psi0, double tol) {
    check_operator_state(op, psi0);
    std::vector<Complex> image = op.apply(psi0.values);
    return norm2(image) <= tol * std::max(1.0, op.frobenius_norm()) * norm2(psi0.values);
}

Complex average(const StateVector& psi) {
    if (psi.values.empty()) throw Error("average: empty state");
    Complex sum{0.0, 0.0};
    for (const Complex& z : psi.values) sum += z;
    return sum / static_cast<double>(psi.values.size());
}

std::vector<TimeSeriesRow> time_series(const Matrix& op, const StateVector& psi0,
                                       const EvolutionParams& params) {
    params.validate();
    check_operator_state(op, psi0);
    std::vector<TimeSeriesRow> out;
    if (params.grid.empty()) return out;
    Spectrum spec = spectrum(op);
    out.reserve(params.grid.size());
    for (double t : params.grid) {
        StateVector psi = evolve_with_spectrum(spec, psi0, t, params.hbar);
        Complex avg = average(psi);
        TimeSeriesRow row;
        row.t = t;
        row.avg_re = avg.real();
        row.avg_im = avg.imag();
        row.avg_angle = std::atan2(row.avg_im, row.avg_re);
        if (row.avg_angle == -std::numbers::pi) row.avg_angle = std::numbers::pi; // (-pi, pi]
        row.norm = norm2(psi.values);
        out.push_back(row);
    }
    return out;
}

Complex quadratic_form(FormKind kind, const OrientedGraph& g, const StateVector& psi) {
    Complex direct{0.0, 0.0};
    Matrix op;
    switch (kind) {
    case FormKind::even: {
        if (psi.kind != StateKind::vertex ||
            static_cast<int>(psi.values.size()) != g.vertex_count())
            throw Error("quadratic_form: even form needs a vertex state");
        for (const auto& e : g.edges()) {
            Complex diff = psi.values[static_cast<std::size_t>(e.head)] -
                           psi.values[static_cast<std::size_t>(e.tail)];
            direct += diff * diff;
        }
        op = even_laplacian(g);
        break;
    }
    case FormKind::odd: {
        if (psi.kind != StateKind::edge || static_cast<int>(psi.values.size()) != g.edge_count())
            throw Error("quadratic_form: odd form needs an edge state");
        for (int v = 0; v < g.vertex_count(); ++v) {
            Complex signed_sum{0.0, 0.0};
            for (int e : g.incident_edges()[static_cast<std::size_t>(v)]) {
                double k = g.edge(e).head == v ? 1.0 : -1.0;
                signed_sum += k * psi.values[static_cast<std::size_t>(e)];
            }
            direct += signed_sum * signed_sum;
        }
        op = odd_laplacian(g);
        break;
    }
    case FormKind::incidence: {
        if (psi.kind != StateKind::vertex_edge ||
            static_cast<int>(psi.values.size()) != g.vertex_count() + g.edge_count())
            throw Error("quadratic_form: incidence form needs a vertex-edge state");
        for (int e = 0; e < g.edge_count(); ++e) {
            Complex diff = psi.values[static_cast<std::size_t>(g.edge(e).head)] -
                           psi.values[static_cast<std::size_t>(g.edge(e).tail)];
            direct += 2.0 * psi.values[static_cast<std::size_t>(g.vertex_count() + e)] * diff;
        }
        op = incidence_dirac(g);
        break;
    }
    }

    // cross-check against the bilinear form psi^t M psi (no conjugation)
    std::vector<Complex> image = op.apply(psi.values);
    Complex bilinear{0.0, 0.0};
    for (std::size_t i = 0; i < image.size(); ++i) bilinear += psi.values[i] * image[i];
    double scale = std::max(1.0, norm2(psi.values));
    if (std::abs(direct - bilinear) > 1e-10 * scale * scale)
        throw std::logic_error("quadratic_form: graph formula disagrees with psi^t M psi");
    return direct;
}

RootCheckReport root_superset_check(const OrientedGraph& g, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    auto random_complex = [&]() { return Complex{coeff(rng), coeff(rng)}; };

    std::vector<std::vector<double>> vertex_kernel = kernel_basis(even_laplacian(g));
    std::vector<CycleBasisElement> cycles = cycle_basis(g);

    RootCheckReport report;
    auto check = [&](StateVector psi) {
        double n = norm2(psi.values);
        if (n > 0.0)
            for (Complex& z : psi.values) z /= n;
        Complex q = quadratic_form(FormKind::incidence, g, psi);
        report.max_abs_value = std::max(report.max_abs_value, std::abs(q));
        if (std::abs(q) > 1e-9)
            throw std::logic_error("root_superset_check: known root has nonzero form value");
    };

    int nv = g.vertex_count();
    int ne = g.edge_count();
    for (int s = 0; s < samples; ++s) {
        // kernel vertex state (constant on components) + arbitrary edge state
        StateVector psi;
        psi.kind = StateKind::vertex_edge;
        psi.values.assign(static_cast<std::size_t>(nv + ne), Complex{0.0, 0.0});
        for (const auto& basis_vec : vertex_kernel) {
            Complex weight = random_complex();
            for (int i = 0; i < nv; ++i)
                psi.values[static_cast<std::size_t>(i)] += weight * basis_vec[static_cast<std::size_t>(i)];
        }
        for (int e = 0; e < ne; ++e) psi.values[static_cast<std::size_t>(nv + e)] = random_complex();
        check(std::move(psi));
        ++report.kernel_vertex_samples;

        // arbitrary vertex state + kernel edge state (cycle combination)
        StateVector phi;
        phi.kind = StateKind::vertex_edge;
        phi.values.assign(static_cast<std::size_t>(nv + ne), Complex{0.0, 0.0});
        for (int i = 0; i < nv; ++i) phi.values[static_cast<std::size_t>(i)] = random_complex();
        for (const auto& cyc : cycles) {
            Complex weight = random_complex();
            for (int e = 0; e < ne; ++e)
                phi.values[static_cast<std::size_t>(nv + e)] +=
                    weight * static_cast<double>(cyc.coefficients[static_cast<std::size_t>(e)]);
        }
        check(std::move(phi));
        ++report.kernel_edge_samples;
    }
    return report;
}

} // namespace graphdirac
