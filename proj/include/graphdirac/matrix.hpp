#pragma once

#include "graphdirac/bigint.hpp"

#include <complex>
#include <string>
#include <vector>

namespace graphdirac {

using Complex = std::complex<double>;

/// Dense real matrix, row-major. Small and value-semantic: every graph
/// operator at desk scale is a handful of kilobytes.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0);
    static Matrix identity(int n);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    double& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    [[nodiscard]] Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    [[nodiscard]] Matrix scaled(double factor) const;

    [[nodiscard]] std::vector<double> apply(const std::vector<double>& v) const;
    [[nodiscard]] std::vector<Complex> apply(const std::vector<Complex>& v) const;

    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] double max_abs() const;
    /// max |M - M^t| <= rel_tol * ||M||
    [[nodiscard]] bool is_symmetric(double rel_tol = 1e-12) const;

    bool operator==(const Matrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
};

/// Dense integer matrix for exact computations (walk counts, operator powers).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols, long long fill = 0);
    static IntMatrix identity(int n);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    long long& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    long long operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    IntMatrix operator*(const IntMatrix& rhs) const;
    [[nodiscard]] Matrix to_real() const;

    bool operator==(const IntMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> entries_;
};

/// Dense complex matrix. Used for the weighted adjacency matrix of lattice
/// graphs, whose determinant encodes the squared perfect-matching count.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols, Complex fill = Complex{0.0, 0.0});

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }

    Complex& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    Complex operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    /// Determinant by partially pivoted Gaussian elimination (floating point).
    [[nodiscard]] Complex determinant() const;

    bool operator==(const ComplexMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

/// Gaussian integer a + b*i with 64-bit components.
struct GaussInt {
    long long re = 0;
    long long im = 0;

    bool operator==(const GaussInt&) const = default;

    GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(GaussInt o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
};

/// Exact |det|^2 of a square Gaussian-integer matrix via fraction-free
/// (Bareiss) elimination; row-major input. Entries must stay within the
/// ranges the caller's Hadamard bound guarantees.
BigInt gauss_det_abs2(std::vector<GaussInt> entries, int n);

/// "%.17g" with -0 normalized to 0; integers render without a decimal point.
std::string format_double(double value);

// JSON serialization: arrays of rows, 17 significant digits, complex entries
// as [re, im] pairs. Printed matrices re-parse to the identical matrix.
std::string to_json(const Matrix& m);
std::string to_json(const ComplexMatrix& m);
Matrix parse_matrix_json(const std::string& text);
ComplexMatrix parse_complex_matrix_json(const std::string& text);

} // namespace graphdirac
