#pragma once

// Dense matrices over F_{p^r} and exact Gaussian elimination.
// Pivoting is deterministic: the first nonzero entry in column order.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/ff.hpp"

namespace cyclo::linalg {

using ff::code_t;
using ff::Element;
using ff::Field;

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    code_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, code_t v) { a_[i * cols_ + j] = v; }
    Element operator()(std::size_t i, std::size_t j) const { return {f_, at(i, j)}; }
    void set(std::size_t i, std::size_t j, const Element& v) { set(i, j, v.code()); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
        const auto& fd = f_.data();
        Matrix r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const code_t x = at(i, k);
                if (!x) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.set(i, j, fd.add(r.at(i, j), fd.mul(x, o.at(k, j))));
            }
        return r;
    }
    Matrix operator+(const Matrix& o) const { return zip(o, false); }
    Matrix operator-(const Matrix& o) const { return zip(o, true); }

    std::vector<code_t> apply(const std::vector<code_t>& v) const {
        if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
        const auto& fd = f_.data();
        std::vector<code_t> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = fd.add(out[i], fd.mul(at(i, j), v[j]));
        return out;
    }

    Matrix pow(std::uint64_t e) const {
        if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "power of a non-square matrix");
        Matrix r = identity(f_, rows_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Entrywise x -> x^e.
    Matrix map_pow(std::uint64_t e) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = f_.data().pow(x, e);
        return r;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    const std::vector<code_t>& raw() const { return a_; }

private:
    Matrix zip(const Matrix& o, bool minus) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
        const auto& fd = f_.data();
        Matrix r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = minus ? fd.sub(a_[i], o.a_[i]) : fd.add(a_[i], o.a_[i]);
        return r;
    }

    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<code_t> a_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Echelon rref(Matrix m) {
    const auto& fd = m.field().data();
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = row; i < m.rows(); ++i)
            if (m.at(i, col)) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const code_t t = m.at(row, j);
                m.set(row, j, m.at(sel, j));
                m.set(sel, j, t);
            }
        const code_t inv = fd.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, fd.mul(m.at(row, j), inv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || !m.at(i, col)) continue;
            const code_t f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.set(i, j, fd.sub(m.at(i, j), fd.mul(f, m.at(row, j))));
        }
        piv.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(piv)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {v : m v = 0}, one vector per free column (free coordinate = 1).
inline std::vector<std::vector<code_t>> kernel(const Matrix& m) {
    const auto e = rref(m);
    const auto& fd = m.field().data();
    std::vector<char> is_piv(m.cols(), 0);
    for (auto c : e.pivots) is_piv[c] = 1;
    std::vector<std::vector<code_t>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_piv[free]) continue;
        std::vector<code_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = fd.neg(e.reduced.at(r, free));
        out.push_back(std::move(v));
    }
    return out;
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) fail(ErrorKind::NotAUnit, "singular matrix");
    Matrix r(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.set(i, j, e.reduced.at(i, n + j));
    return r;
}

/// Stacks the rows of several matrices with equal column count.
inline Matrix stack(const std::vector<Matrix>& ms, const Field& f, std::size_t cols) {
    std::size_t rows = 0;
    for (auto& m : ms) {
        if (m.cols() != cols) fail(ErrorKind::DimensionMismatch, "stacked matrices differ in width");
        rows += m.rows();
    }
    Matrix out(f, rows, cols);
    std::size_t r0 = 0;
    for (auto& m : ms) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out.set(r0 + i, j, m.at(i, j));
        r0 += m.rows();
    }
    return out;
}

} // namespace cyclo::linalg
