#pragma once

#include "graphdirac/graph.hpp"
#include "graphdirac/matrix.hpp"

#include <vector>

namespace graphdirac {

/// Vertex-space Laplacian I*I^t; equals degree-minus-adjacency. Both forms
/// are computed and cross-checked.
Matrix even_laplacian(const OrientedGraph& g);

/// Edge-space Laplacian I^t*I; diagonal entries are all 2.
Matrix odd_laplacian(const OrientedGraph& g);

/// Block matrix [[0, I], [I^t, 0]] on vertex-edge states; squares to
/// block-diag(even, odd).
Matrix incidence_dirac(const OrientedGraph& g);

enum class Parity { even, odd };

/// Symmetric square root of the chosen Laplacian (eigenvalue-wise sqrt).
Matrix spectral_dirac(const OrientedGraph& g, Parity parity);

/// Full orthonormal eigendecomposition of a real symmetric matrix,
/// eigenvalues ascending, each eigenvector's first nonzero component
/// positive.
struct Spectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // column i pairs with eigenvalues[i]
};

/// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius mass
/// drops below 1e-13 * ||M||. Throws on non-symmetric input or (diagnostic)
/// non-convergence.
Spectrum spectrum(const Matrix& m);

/// Orthonormal basis of the span of eigenvectors with
/// |lambda| <= tol * max(1, ||m||); ||.|| is the Frobenius norm.
std::vector<std::vector<double>> kernel_basis(const Matrix& m, double tol = 1e-9);

} // namespace graphdirac
