#pragma once

#include "bipoly.hpp"
#include "linalg.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

namespace unitary_radon {

/// All multi-indices of length n and total degree k, in lexicographic order.
inline std::vector<MultiIndex> multi_indices(int n, int k) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n > 0) rec(0, k);
    return out;
}

/// Monomial basis of P_{p,q}.
inline std::vector<Monomial> bidegree_monomials(int n, int p, int q) {
    std::vector<Monomial> out;
    const auto as = multi_indices(n, p);
    const auto bs = multi_indices(n, q);
    for (const auto& a : as)
        for (const auto& b : bs) out.emplace_back(a, b);
    return out;
}

namespace detail {

inline std::vector<BiPoly<GaussRational>> compute_harmonic_basis(int p, int q, int n) {
    const auto cols = bidegree_monomials(n, p, q);
    std::vector<std::vector<Rational>> kernel;
    if (p == 0 || q == 0) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<Rational> v(cols.size(), Rational(0));
            v[c] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        const auto rows = bidegree_monomials(n, p - 1, q - 1);
        std::map<Monomial, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
        Matrix<Rational> lap(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (int j = 0; j < n; ++j) {
                const int w = cols[c].alpha(j) * cols[c].beta(j);
                if (w == 0) continue;
                Monomial d(cols[c]);
                --d.alpha(j);
                --d.beta(j);
                lap[row_of.at(d)][c] += w;
            }
        }
        kernel = nullspace(std::move(lap), cols.size());
    }
    std::vector<BiPoly<GaussRational>> basis;
    for (const auto& v : kernel) {
        BiPoly<GaussRational> h(n);
        for (std::size_t c = 0; c < cols.size(); ++c) h.add_term(cols[c], GaussRational(v[c]));
        basis.push_back(std::move(h));
    }
    return basis;
}

}  // namespace detail

/// Rational basis of the complex spherical harmonics H_{p,q}; memoized per (p,q,n).
template <class S = GaussRational>
std::vector<BiPoly<S>> harmonic_basis(int p, int q, int n) {
    detail::check_pqn(p, q, n);
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, std::vector<BiPoly<GaussRational>>> cache;
    std::vector<BiPoly<GaussRational>> exact;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({p, q, n});
        if (it == cache.end()) it = cache.emplace(std::tuple{p, q, n}, detail::compute_harmonic_basis(p, q, n)).first;
        exact = it->second;
    }
    if constexpr (std::is_same_v<S, GaussRational>) {
        return exact;
    } else {
        std::vector<BiPoly<S>> out;
        for (const auto& h : exact)
            out.push_back(convert<S>(h, [](const GaussRational& c) { return S(to_complex(c)); }));
        return out;
    }
}

/// Splits a bi-homogeneous P into harmonic pieces: P = sum_j |z|^{2j} H_j.
template <class S>
std::vector<std::pair<int, BiPoly<S>>> fischer_decompose(const BiPoly<S>& poly) {
    const auto deg = bidegree_of(poly);
    if (!deg) throw ContractViolation("fischer_decompose: input is not bi-homogeneous");
    const int n = poly.n();
    const int p = deg->p, q = deg->q;
    if (poly.is_zero()) return {};
    const auto rows = bidegree_monomials(n, p, q);
    std::map<Monomial, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);

    struct Column {
        int j;
        BiPoly<S> h;
        BiPoly<S> lifted;
    };
    std::vector<Column> columns;
    for (int j = 0; j <= std::min(p, q); ++j) {
        for (auto& h : harmonic_basis<S>(p - j, q - j, n)) {
            BiPoly<S> lifted = h;
            for (int i = 0; i < j; ++i) lifted = times_radial(lifted);
            columns.push_back({j, std::move(h), std::move(lifted)});
        }
    }
    if (columns.size() != rows.size()) throw SingularError("fischer_decompose: dimension count mismatch");
    Matrix<S> a(rows.size(), std::vector<S>(columns.size()));
    Matrix<S> b(rows.size(), std::vector<S>(1));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [m, v] : columns[c].lifted.terms()) a[row_of.at(m)][c] = v;
    for (const auto& [m, v] : poly.terms()) b[row_of.at(m)][0] = v;
    const auto x = solve(std::move(a), std::move(b));

    std::map<int, BiPoly<S>> parts;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto [it, _] = parts.try_emplace(columns[c].j, n);
        it->second += columns[c].h.times(x[c][0]);
    }
    std::vector<std::pair<int, BiPoly<S>>> out;
    for (auto& [j, h] : parts)
        if (!h.is_zero()) out.emplace_back(j, std::move(h));
    return out;
}

}  // namespace unitary_radon
