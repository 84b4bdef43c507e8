#ifndef GALECIRCUIT_MATRIX_HPP
#define GALECIRCUIT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "galecircuit/rational.hpp"

namespace galecircuit {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix of rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RatVector row(std::size_t r) const {
        return RatVector(entries.begin() + r * cols, entries.begin() + (r + 1) * cols);
    }

    RatVector col(std::size_t c) const {
        RatVector v(rows);
        for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
        return v;
    }
};

inline RatVector mat_vec(const RatMatrix& m, const RatVector& v) {
    if (v.size() != m.cols) throw PreconditionViolated("matrix/vector size mismatch");
    RatVector out(m.rows, Rational(0));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (sign(m.at(r, c)) != 0 && sign(v[c]) != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

/// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols && prow < m.rows; ++c) {
        std::size_t sel = prow;
        while (sel < m.rows && sign(m.at(sel, c)) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(prow, j));
        Rational inv = m.at(prow, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(prow, j) /= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == prow || sign(m.at(r, c)) == 0) continue;
            Rational f = m.at(r, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) -= f * m.at(prow, j);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

/// Basis of the right kernel { v : m v = 0 }. Exact; size = cols - rank.
inline std::vector<RatVector> kernel(RatMatrix m) {
    std::size_t cols = m.cols;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = rhs for square invertible m. Throws SingularMatrix otherwise.
inline RatVector solve(const RatMatrix& m, const RatVector& rhs) {
    if (m.rows != m.cols) throw PreconditionViolated("solve requires a square matrix");
    if (rhs.size() != m.rows) throw PreconditionViolated("rhs size mismatch");
    RatMatrix aug(m.rows, m.cols + 1);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != m.rows || pivots.back() == m.cols)
        throw SingularMatrix("rank " + std::to_string(pivots.size()) + " < " +
                             std::to_string(m.rows));
    return aug.col(m.cols);
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows != m.cols) throw PreconditionViolated("inverse requires a square matrix");
    std::size_t n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() >= n)
        throw SingularMatrix("matrix not invertible");
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

inline Rational determinant(RatMatrix m) {
    if (m.rows != m.cols) throw PreconditionViolated("determinant requires a square matrix");
    Rational det(1);
    std::size_t n = m.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && sign(m.at(sel, c)) == 0) ++sel;
        if (sel == n) return Rational(0);
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rational inv = m.at(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sign(m.at(r, c)) == 0) continue;
            Rational f = m.at(r, c) / inv;
            for (std::size_t j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

}  // namespace galecircuit

#endif
