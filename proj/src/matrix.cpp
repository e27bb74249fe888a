#include "graphdirac/matrix.hpp"

#include "graphdirac/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <utility>

namespace graphdirac {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw Error("Matrix: negative dimension");
}

Matrix Matrix::identity(int n) {
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("Matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("Matrix sum: dimension mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error("Matrix difference: dimension mismatch");
    Matrix out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

Matrix Matrix::scaled(double factor) const {
    Matrix out(*this);
    for (double& x : out.entries_) x *= factor;
    return out;
}

std::vector<double> Matrix::apply(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("Matrix apply: dimension mismatch");
    std::vector<double> out(rows_, 0.0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Complex> Matrix::apply(const std::vector<Complex>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("Matrix apply: dimension mismatch");
    std::vector<Complex> out(rows_, Complex{0.0, 0.0});
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : entries_) sum += x * x;
    return std::sqrt(sum);
}

double Matrix::max_abs() const {
    double out = 0.0;
    for (double x : entries_) out = std::max(out, std::fabs(x));
    return out;
}

bool Matrix::is_symmetric(double rel_tol) const {
    if (rows_ != cols_) return false;
    double bound = rel_tol * frobenius_norm();
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > bound) return false;
    return true;
}

IntMatrix::IntMatrix(int rows, int cols, long long fill)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw Error("IntMatrix: negative dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("IntMatrix product: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            long long aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

Matrix IntMatrix::to_real() const {
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = static_cast<double>((*this)(i, j));
    return out;
}

ComplexMatrix::ComplexMatrix(int rows, int cols, Complex fill)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw Error("ComplexMatrix: negative dimension");
}

Complex ComplexMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant: matrix not square");
    int n = rows_;
    if (n == 0) return Complex{1.0, 0.0};
    ComplexMatrix a(*this);
    Complex det{1.0, 0.0};
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) == 0.0) return Complex{0.0, 0.0};
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Complex factor = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

BigInt gauss_det_abs2(std::vector<GaussInt> a, int n) {
    if (static_cast<int>(a.size()) != n * n) throw Error("gauss_det_abs2: bad entry count");
    if (n == 0) return BigInt(1);
    auto at = [&](int i, int j) -> GaussInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    // Bareiss: entries stay exact k x k minors; each division is exact.
    GaussInt prev{1, 0};
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        if (at(col, col).is_zero()) {
            int pivot = -1;
            for (int r = col + 1; r < n; ++r)
                if (!at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int j = col + 1; j < n; ++j) {
                GaussInt num = at(r, j) * at(col, col) - at(r, col) * at(col, j);
                // exact Gaussian division by prev: num * conj(prev) / |prev|^2
                long long norm = prev.re * prev.re + prev.im * prev.im;
                GaussInt scaled{num.re * prev.re + num.im * prev.im,
                                num.im * prev.re - num.re * prev.im};
                if (scaled.re % norm != 0 || scaled.im % norm != 0)
                    throw std::logic_error("gauss_det_abs2: inexact Bareiss division");
                at(r, j) = {scaled.re / norm, scaled.im / norm};
            }
            at(r, col) = {0, 0};
        }
        prev = at(col, col);
    }
    GaussInt det = at(n - 1, n - 1); // sign flips do not change |det|^2
    (void)sign;
    return BigInt(det.re) * BigInt(det.re) + BigInt(det.im) * BigInt(det.im);
}

std::string format_double(double value) {
    if (value == 0.0) return "0"; // normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string to_json(const Matrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += format_double(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

std::string to_json(const ComplexMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ",";
            out += "[" + format_double(m(i, j).real()) + "," + format_double(m(i, j).imag()) + "]";
        }
        out += "]";
    }
    return out + "]";
}

namespace {

Complex parse_entry(const nlohmann::json& cell) {
    if (cell.is_number()) return Complex{cell.get<double>(), 0.0};
    if (cell.is_array() && cell.size() == 2 && cell[0].is_number() && cell[1].is_number())
        return Complex{cell[0].get<double>(), cell[1].get<double>()};
    throw Error("matrix JSON: entries must be numbers or [re, im] pairs");
}

std::vector<std::vector<Complex>> parse_rows(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_array()) throw Error("matrix JSON: expected an array of rows");
    std::vector<std::vector<Complex>> rows;
    for (const auto& row : doc) {
        if (!row.is_array()) throw Error("matrix JSON: expected an array of rows");
        std::vector<Complex> entries;
        for (const auto& cell : row) entries.push_back(parse_entry(cell));
        if (!rows.empty() && rows.front().size() != entries.size())
            throw Error("matrix JSON: ragged rows");
        rows.push_back(std::move(entries));
    }
    return rows;
}

} // namespace

Matrix parse_matrix_json(const std::string& text) {
    auto rows = parse_rows(text);
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    Matrix out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Complex z = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (z.imag() != 0.0) throw Error("matrix JSON: complex entry in a real matrix");
            out(i, j) = z.real();
        }
    return out;
}

ComplexMatrix parse_complex_matrix_json(const std::string& text) {
    auto rows = parse_rows(text);
    int r = static_cast<int>(rows.size());
    int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    ComplexMatrix out(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            out(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

} // namespace graphdirac
