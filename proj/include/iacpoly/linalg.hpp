#pragma once

// Exact vectors, matrices and fraction-free elimination.
//
// Rational rows are first scaled to integer rows (row-wise denominator LCM),
// then eliminated with Bareiss' algorithm over BigInt so every intermediate
// value is an exact minor of the scaled matrix.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "iacpoly/errors.hpp"
#include "iacpoly/rational.hpp"

namespace iacpoly {

using QVector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows, QVector(cols)), cols_(cols) {}
    explicit QMatrix(std::vector<QVector> rows) : rows_(std::move(rows)) {
        cols_ = rows_.empty() ? 0 : rows_.front().size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    }
    QMatrix(std::initializer_list<QVector> rows) : QMatrix(std::vector<QVector>(rows)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows() == cols(); }

    Rational& operator()(std::size_t r, std::size_t c) { return rows_[r][c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return rows_[r][c]; }
    [[nodiscard]] const QVector& row(std::size_t r) const { return rows_[r]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::vector<QVector> rows_;
    std::size_t cols_ = 0;
};

inline Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline QMatrix transpose(const QMatrix& a) {
    QMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline QVector operator*(const QMatrix& a, const QVector& x) {
    if (a.cols() != x.size()) throw DimensionError("matrix-vector product: length mismatch");
    QVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
    return y;
}

namespace detail {

using IntRow = std::vector<BigInt>;

// Scales `row` by the LCM of its denominators. Returns the scale factor.
inline BigInt integer_row(const QVector& row, IntRow& out) {
    BigInt scale = 1;
    for (const auto& v : row) scale = lcm(scale, v.denominator());
    out.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        out[j] = row[j].numerator() * (scale / row[j].denominator());
    return scale;
}

struct BareissResult {
    std::vector<IntRow> m;        // upper-trapezoidal after elimination
    std::vector<std::size_t> pivot_cols;
    int sign = 1;                 // parity of row swaps
};

// Fraction-free forward elimination restricted to the first `elim_cols` columns.
// Rows are permuted so that pivots occupy rows 0..rank-1.
inline BareissResult bareiss(std::vector<IntRow> m, std::size_t elim_cols) {
    BareissResult res;
    const std::size_t nrows = m.size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < elim_cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && m[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            res.sign = -res.sign;
        }
        const BigInt& piv = m[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < m[i].size(); ++j) {
                BigInt t = m[i][j] * piv - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        // Rows above the pivot row in skipped columns keep their old scale;
        // Bareiss only needs prev to track the last pivot used.
        prev = piv;
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.m = std::move(m);
    return res;
}

}  // namespace detail

/// Exact determinant of a square matrix.
inline Rational determinant(const QMatrix& a) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<detail::IntRow> m(n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) scale *= detail::integer_row(a.row(i), m[i]);
    auto res = detail::bareiss(std::move(m), n);
    if (res.pivot_cols.size() < n) return 0;
    return Rational(res.m[n - 1][n - 1] * res.sign, scale);
}

/// Solves A x = b for square A. Returns nullopt when A is singular.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
    if (!a.is_square()) throw DimensionError("solve: matrix is not square");
    if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
    const std::size_t n = a.rows();
    std::vector<detail::IntRow> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        QVector aug = a.row(i);
        aug.push_back(b[i]);
        detail::integer_row(aug, m[i]);
    }
    auto res = detail::bareiss(std::move(m), n);
    if (res.pivot_cols.size() < n) return std::nullopt;
    QVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(res.m[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(res.m[ii][j]) * x[j];
        x[ii] = s / Rational(res.m[ii][ii]);
    }
    return x;
}

inline std::size_t rank(const QMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    std::vector<detail::IntRow> m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) detail::integer_row(a.row(i), m[i]);
    return detail::bareiss(std::move(m), a.cols()).pivot_cols.size();
}

}  // namespace iacpoly
