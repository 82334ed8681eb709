#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace unitary_radon {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Solves A X = B by Gaussian elimination. Exact scalars pivot on the first
/// nonzero entry, floating scalars on the largest magnitude.
template <class S>
Matrix<S> solve(Matrix<S> a, Matrix<S> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionError("solve: row count mismatch");
    const std::size_t m = n ? b[0].size() : 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        double best = 0.0;
        for (std::size_t r = col; r < n; ++r) {
            if (is_zero(a[r][col])) continue;
            if constexpr (is_exact_v<S>) {
                piv = r;
                break;
            } else {
                const double mag = magnitude(a[r][col]);
                if (mag > best) {
                    best = mag;
                    piv = r;
                }
            }
        }
        if (piv == n) throw SingularError("solve: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const S inv = from_rational<S>(Rational(1)) / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            const S f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            for (std::size_t c = 0; c < m; ++c) b[r][c] -= f * b[col][c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        const S inv = from_rational<S>(Rational(1)) / a[r][r];
        for (std::size_t c = 0; c < m; ++c) b[r][c] *= inv;
    }
    return b;
}

/// Basis of the right nullspace of a rational matrix via reduced row echelon form.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> a, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && sgn(a[piv][col]) == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        const Rational inv = 1 / a[row][col];
        for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || sgn(a[r][col]) == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace unitary_radon
