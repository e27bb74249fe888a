#include "graphdirac/linops.hpp"

#include "graphdirac/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace graphdirac {

Matrix even_laplacian(const OrientedGraph& g) {
    Matrix inc = incidence_matrix(g);
    Matrix product = inc * inc.transpose();

    Matrix dma(g.vertex_count(), g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dma(v, v) = g.degree(v);
    for (const auto& e : g.edges()) {
        dma(e.tail, e.head) -= 1.0;
        dma(e.head, e.tail) -= 1.0;
    }
    if (!(product == dma))
        throw std::logic_error("even_laplacian: I*I^t disagrees with degree-minus-adjacency");
    return product;
}

Matrix odd_laplacian(const OrientedGraph& g) {
    Matrix inc = incidence_matrix(g);
    return inc.transpose() * inc;
}

Matrix incidence_dirac(const OrientedGraph& g) {
    int nv = g.vertex_count();
    int ne = g.edge_count();
    Matrix out(nv + ne, nv + ne);
    Matrix inc = incidence_matrix(g);
    for (int v = 0; v < nv; ++v)
        for (int e = 0; e < ne; ++e) {
            out(v, nv + e) = inc(v, e);
            out(nv + e, v) = inc(v, e);
        }
    return out;
}

Matrix spectral_dirac(const OrientedGraph& g, Parity parity) {
    Matrix lap = parity == Parity::even ? even_laplacian(g) : odd_laplacian(g);
    Spectrum spec = spectrum(lap);
    int n = lap.rows();
    Matrix out(n, n);
    // Numerical zeros must stay exact zeros: the square root would otherwise
    // lift them to ~1e-8 and the kernels of the root and the Laplacian would
    // no longer coincide. Integer-entried Laplacians keep genuine eigenvalues
    // far above this threshold at the supported sizes.
    double zero_bound = 1e-10 * std::max(1.0, lap.frobenius_norm());
    for (int k = 0; k < n; ++k) {
        double lambda = spec.eigenvalues[static_cast<std::size_t>(k)];
        if (lambda < -zero_bound)
            throw std::logic_error("spectral_dirac: Laplacian eigenvalue below -1e-10");
        if (lambda < zero_bound) continue; // clamp to zero, nothing to add
        double root = std::sqrt(lambda);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += root * spec.eigenvectors(i, k) * spec.eigenvectors(j, k);
    }
    return out;
}

Spectrum spectrum(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("spectrum: matrix not square");
    if (!m.is_symmetric()) throw Error("spectrum: matrix not symmetric");
    int n = m.rows();
    Matrix a(m);
    Matrix v = Matrix::identity(n);

    auto off_mass = [&]() {
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(sum);
    };

    double threshold = 1e-13 * m.frobenius_norm();
    const int max_sweeps = 100;
    int sweep = 0;
    while (off_mass() > threshold) {
        if (++sweep > max_sweeps) throw Error("spectrum: Jacobi iteration did not converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double h = a(q, q) - a(p, p);
                double t;
                if (std::fabs(h) + 100.0 * std::fabs(apq) == std::fabs(h)) {
                    t = apq / h; // rotation angle below double resolution
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum out;
    out.eigenvalues.reserve(static_cast<std::size_t>(n));
    out.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        out.eigenvalues.push_back(a(src, src));
        double flip = 1.0;
        for (int i = 0; i < n; ++i) {
            if (std::fabs(v(i, src)) > 1e-12) {
                flip = v(i, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = flip * v(i, src);
    }
    return out;
}

std::vector<std::vector<double>> kernel_basis(const Matrix& m, double tol) {
    Spectrum spec = spectrum(m);
    double bound = tol * std::max(1.0, m.frobenius_norm());
    std::vector<std::vector<double>> out;
    for (int k = 0; k < m.rows(); ++k) {
        if (std::fabs(spec.eigenvalues[static_cast<std::size_t>(k)]) > bound) continue;
        std::vector<double> vec(static_cast<std::size_t>(m.rows()));
        for (int i = 0; i < m.rows(); ++i) vec[static_cast<std::size_t>(i)] = spec.eigenvectors(i, k);
        out.push_back(std::move(vec));
    }
    return out;
}

} // namespace graphdirac
