#pragma once

/**
 * Exact linear algebra over Q and Z: ranks, kernels, linear solves and
 * integer kernel lattices. Matrices are plain row-major vectors of rows.
 *
 * Two independent rank routes are kept on purpose: fraction-free row
 * elimination (Bareiss) and rational column elimination. Tests pit them
 * against each other.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropic/rational.hpp"

namespace tropic {

using RatMatrix = std::vector<RatVec>;
using IntMatrix = std::vector<IntVec>;

inline std::size_t column_count(const RatMatrix& a, std::size_t fallback = 0)
{
    return a.empty() ? fallback : a.front().size();
}

inline void require_rectangular(const RatMatrix& a)
{
    for (const auto& row : a) require_same_dim(row.size(), a.front().size(), "matrix row length");
}

/// Scale every row by the lcm of its denominators.
inline IntMatrix clear_denominators(const RatMatrix& a)
{
    IntMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Integer l = 1;
        for (const auto& x : row) l = lcm(l, den(x));
        IntVec r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(num(x * l));
        out.push_back(std::move(r));
    }
    return out;
}

/// Rank by Bareiss fraction-free elimination with row pivoting.
inline std::size_t rank_fraction_free(const RatMatrix& a)
{
    if (a.empty()) return 0;
    require_rectangular(a);
    IntMatrix m = clear_denominators(a);
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// Rank by rational elimination on columns (pivot chosen along each row).
inline std::size_t rank_column_pivot(const RatMatrix& a)
{
    if (a.empty()) return 0;
    require_rectangular(a);
    RatMatrix m = a;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t c = 0;
    for (std::size_t r = 0; r < rows && c < cols; ++r) {
        std::size_t p = c;
        while (p < cols && m[r][p] == 0) ++p;
        if (p == cols) continue;
        if (p != c)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][p], m[i][c]);
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (m[r][j] == 0) continue;
            Rational f = m[r][j] / m[r][c];
            for (std::size_t i = r; i < rows; ++i) m[i][j] -= f * m[i][c];
        }
        ++c;
    }
    return c;
}

inline std::size_t rank(const RatMatrix& a) { return rank_fraction_free(a); }

/// dim ker A = #columns - rank A. `cols` is used when A has no rows.
inline std::size_t kernel_dimension(const RatMatrix& a, std::size_t cols)
{
    if (!a.empty()) require_same_dim(a.front().size(), cols, "kernel_dimension");
    return cols - rank(a);
}

inline std::size_t kernel_dimension(const RatMatrix& a) { return kernel_dimension(a, column_count(a)); }

struct Echelon {
    RatMatrix rows;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

inline Echelon rref(const RatMatrix& a, std::size_t cols)
{
    Echelon e;
    e.rows = a;
    for (const auto& row : e.rows) require_same_dim(row.size(), cols, "rref");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < e.rows.size(); ++c) {
        std::size_t p = r;
        while (p < e.rows.size() && e.rows[p][c] == 0) ++p;
        if (p == e.rows.size()) continue;
        std::swap(e.rows[p], e.rows[r]);
        Rational inv = 1 / e.rows[r][c];
        for (auto& x : e.rows[r]) x *= inv;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (i == r || e.rows[i][c] == 0) continue;
            Rational f = e.rows[i][c];
            for (std::size_t j = c; j < cols; ++j) e.rows[i][j] -= f * e.rows[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rows.resize(r);
    return e;
}

/// Basis of ker A, one vector per free column, each scaled to a primitive
/// integer vector (so the output is reproducible).
inline std::vector<IntVec> kernel_basis(const RatMatrix& a, std::size_t cols)
{
    Echelon e = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<IntVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(primitive_multiple(v));
    }
    return basis;
}

/// Row space basis (rows of the RREF, made primitive).
inline std::vector<IntVec> row_space_basis(const RatMatrix& a, std::size_t cols)
{
    std::vector<IntVec> out;
    for (const auto& row : rref(a, cols).rows) out.push_back(primitive_multiple(row));
    return out;
}

/// Some x with A x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b, std::size_t cols)
{
    require_same_dim(a.size(), b.size(), "solve");
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon e = rref(aug, cols + 1);
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

inline RatVec multiply(const RatMatrix& a, const RatVec& x)
{
    RatVec out;
    out.reserve(a.size());
    for (const auto& row : a) out.push_back(dot(row, x));
    return out;
}

inline RatMatrix transpose(const RatMatrix& a, std::size_t cols)
{
    RatMatrix t(cols, RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
    return t;
}

/**
 * Column-style Hermite reduction of an integer matrix: unimodular column
 * operations, tracked in U, bring A to column echelon form A U = R. The
 * pivot of column j of R sits in row pivot_rows[j].
 */
struct ColumnHermite {
    IntMatrix reduced;
    IntMatrix u;
    std::vector<std::size_t> pivot_rows;
};

inline ColumnHermite column_hermite(const IntMatrix& a, std::size_t cols)
{
    ColumnHermite h;
    IntMatrix& m = h.reduced;
    IntMatrix& u = h.u;
    m = a;
    for (const auto& row : m) require_same_dim(row.size(), cols, "column_hermite");
    u.assign(cols, IntVec(cols, Integer(0)));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto column_op = [&](std::size_t i, std::size_t j, const Integer& a11, const Integer& a12,
                         const Integer& a21, const Integer& a22) {
        // (col_i, col_j) <- (a11*col_i + a21*col_j, a12*col_i + a22*col_j)
        for (auto* mat : {&m, &u}) {
            for (auto& row : *mat) {
                Integer x = row[i], y = row[j];
                row[i] = a11 * x + a21 * y;
                row[j] = a12 * x + a22 * y;
            }
        }
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < m.size() && pivot < cols; ++r) {
        for (std::size_t j = pivot + 1; j < cols; ++j) {
            if (m[r][j] == 0) continue;
            Integer a0 = m[r][pivot], b0 = m[r][j];
            // extended Euclid: s*a0 + t*b0 = g
            Integer old_r = a0, cur_r = b0, old_s = 1, s = 0, old_t = 0, t = 1;
            while (cur_r != 0) {
                Integer q = old_r / cur_r;
                Integer tmp = old_r - q * cur_r; old_r = cur_r; cur_r = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
                tmp = old_t - q * t; old_t = t; t = tmp;
            }
            Integer g = old_r;
            if (g == 0) continue;
            // new pivot column = s*c_p + t*c_j ; new c_j = (-b0/g)*c_p + (a0/g)*c_j
            column_op(pivot, j, old_s, -b0 / g, old_t, a0 / g);
        }
        if (m[r][pivot] != 0) {
            h.pivot_rows.push_back(r);
            ++pivot;
        }
    }
    return h;
}

/**
 * Lattice basis of { x in Z^cols : A x = 0 } for an integer matrix A: the
 * columns of U opposite the zero columns of the Hermite form. Because U is
 * unimodular the result is saturated, not just a full-rank sublattice.
 */
inline std::vector<IntVec> integer_kernel(const IntMatrix& a, std::size_t cols)
{
    ColumnHermite h = column_hermite(a, cols);
    std::vector<IntVec> basis;
    for (std::size_t j = h.pivot_rows.size(); j < cols; ++j) {
        IntVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = h.u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some integer solution of A x = b, if one exists.
inline std::optional<IntVec> integer_solve(const IntMatrix& a, const IntVec& b, std::size_t cols)
{
    require_same_dim(b.size(), a.size(), "integer_solve");
    ColumnHermite h = column_hermite(a, cols);
    IntVec y(cols, Integer(0));
    for (std::size_t j = 0; j < h.pivot_rows.size(); ++j) {
        std::size_t r = h.pivot_rows[j];
        Integer rest = b[r];
        for (std::size_t i = 0; i < j; ++i) rest -= h.reduced[r][i] * y[i];
        if (rest % h.reduced[r][j] != 0) return std::nullopt;
        y[j] = rest / h.reduced[r][j];
    }
    IntVec x(cols, Integer(0));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < h.pivot_rows.size(); ++j) x[i] += h.u[i][j] * y[j];
    for (std::size_t r = 0; r < a.size(); ++r) {
        Integer lhs = 0;
        for (std::size_t i = 0; i < cols; ++i) lhs += a[r][i] * x[i];
        if (lhs != b[r]) return std::nullopt;
    }
    return x;
}

inline std::vector<IntVec> integer_kernel(const RatMatrix& a, std::size_t cols)
{
    return integer_kernel(clear_denominators(a), cols);
}

}  // namespace tropic
