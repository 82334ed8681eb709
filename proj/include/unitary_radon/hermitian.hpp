#pragma once

#include "ball.hpp"
#include "bipoly.hpp"
#include "clifford.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "monte_carlo.hpp"

#include <map>
#include <optional>
#include <string>

namespace unitary_radon::hermitian {

template <class S>
using HermPoly = BiPoly<CliffordElement<S>>;

/// Scalar polynomial with every coefficient multiplied on the right by x.
template <class S>
HermPoly<S> lift(const BiPoly<S>& p, const CliffordElement<S>& x) {
    HermPoly<S> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m, x * c);
    return r;
}

/// sum_j f_j^dagger d/dz_j.
template <class S>
HermPoly<S> dirac_z(const HermPoly<S>& f) {
    HermPoly<S> r(f.n());
    for (int j = 0; j < f.n(); ++j) r += dz(j, f).left_times(clifford::witt<S>(f.n(), j + 1, true));
    return r;
}

/// sum_j f_j d/dzbar_j.
template <class S>
HermPoly<S> dirac_zdag(const HermPoly<S>& f) {
    HermPoly<S> r(f.n());
    for (int j = 0; j < f.n(); ++j) r += dzbar(j, f).left_times(clifford::witt<S>(f.n(), j + 1, false));
    return r;
}

/// The vector variable sum_j f_j z_j as a polynomial.
template <class S>
HermPoly<S> vector_variable(int n) {
    HermPoly<S> r(n);
    for (int j = 0; j < n; ++j) {
        MultiIndex a(n, 0);
        a[j] = 1;
        r.add_term(Monomial(a, MultiIndex(n, 0)), clifford::witt<S>(n, j + 1, false));
    }
    return r;
}

/// tau = (t - s)(t^dagger + s^dagger) with t, s the Hermitian vectors of the tuple.
template <class S>
CliffordElement<S> null_tau(const StiefelTuple<S>& tuple) {
    const auto t = clifford::herm_vector(tuple.t(), false), s = clifford::herm_vector(tuple.s(), false);
    const auto td = clifford::herm_vector(tuple.t(), true), sd = clifford::herm_vector(tuple.s(), true);
    return (t - s) * (td + sd);
}

/// Scalar plane wave of bi-degree (p, q) times tau.
template <class S>
HermPoly<S> hmono_wave(const StiefelTuple<S>& tuple, int p, int q) {
    return lift(ball::plane_wave(tuple, p, q), null_tau(tuple));
}

/// Clifford-valued normalized sphere pairing of P^dagger and Q.
template <class S>
CliffordElement<S> herm_inner(const HermPoly<S>& p, const HermPoly<S>& q) {
    return sphere_inner(p, q);
}

/// Grade-j part of every coefficient.
template <class S>
HermPoly<S> grade_part(const HermPoly<S>& f, int j) {
    HermPoly<S> r(f.n());
    for (const auto& [m, c] : f.terms()) r.add_term(m, clifford::grade_project(c, j));
    return r;
}

/// Decomposition by spinor grade; empty grades are omitted.
template <class S>
std::map<int, HermPoly<S>> grade_split(const HermPoly<S>& f) {
    std::map<int, HermPoly<S>> out;
    for (int j = 0; j <= f.n(); ++j) {
        auto part = grade_part(f, j);
        if (!part.is_zero()) out.emplace(j, std::move(part));
    }
    return out;
}

/// The single grade carried by f; throws if f mixes grades.
template <class S>
std::optional<int> pure_grade(const HermPoly<S>& f, double tol = kDefaultTolerance) {
    std::optional<int> grade;
    const double scale = std::max(1.0, max_abs(f));
    for (int j = 0; j <= f.n(); ++j) {
        const auto part = grade_part(f, j);
        const bool present = is_exact_v<S> ? !part.is_zero() : max_abs(part) > tol * scale;
        if (!present) continue;
        if (grade) throw ContractViolation("input mixes spinor grades; split it with grade_split first", double(j));
        grade = j;
    }
    return grade;
}

/// Throws unless both Hermitian Dirac operators annihilate f.
template <class S>
void require_h_monogenic(const HermPoly<S>& f, double tol = kDefaultTolerance) {
    const auto a = dirac_z(f), b = dirac_zdag(f);
    const double residual = std::max(max_abs(a), max_abs(b));
    bool ok;
    if constexpr (is_exact_v<S>) {
        ok = a.is_zero() && b.is_zero();
    } else {
        const double deg = total_degree(f) + 1.0;
        ok = residual <= tol * std::max(1.0, max_abs(f)) * deg;
    }
    if (!ok)
        throw ContractViolation("input is not h-monogenic: dirac_z residual " + std::to_string(max_abs(a)) +
                                    ", dirac_zdag residual " + std::to_string(max_abs(b)),
                                residual);
}

namespace detail {

template <class S>
Projection<CliffordElement<S>, HermPoly<S>> project(const HermPoly<S>& f, const StiefelTuple<S>& tuple,
                                                    std::optional<Branch> branch, double tol) {
    const int n = f.n();
    const auto tau = null_tau(tuple);
    const auto proj = tau * dagger(tau) * from_rational<S>(Rational(1) / 4);
    const auto unit = clifford::one<S>(n);
    Projection<CliffordElement<S>, HermPoly<S>> out{{}, HermPoly<S>(n)};
    const double scale = max_abs(f);
    for (const auto& [d, part] : bidegree_split(f)) {
        if (branch && !in_branch(d, *branch)) continue;
        const BiPoly<S> pw = ball::plane_wave(tuple, d.p, d.q);
        const auto c = proj * herm_inner(lift(pw, unit), part) * from_rational<S>(1 / gamma_pq(d.p, d.q, n));
        if (is_exact_v<S> ? c.is_zero() : magnitude(c) <= tol * std::max(1.0, scale)) continue;
        out.coefficients.emplace(d, c);
        out.reconstructed += lift(pw, c);
    }
    return out;
}

}  // namespace detail

/// Projection onto the tau-submodule: coefficient tau tau^dagger <pw, F>_S / (4 gamma_{p,q}) per bi-degree.
template <class S>
Projection<CliffordElement<S>, HermPoly<S>> herm_radon(const HermPoly<S>& f, const StiefelTuple<S>& tuple,
                                                       std::optional<Branch> branch = std::nullopt,
                                                       double tol = kDefaultTolerance) {
    if (f.n() != tuple.n()) throw DimensionError("herm_radon: dimension mismatch");
    require_h_monogenic(f, tol);
    return detail::project(f, tuple, branch, tol);
}

/// (n+k+1)^2 (n-j+q)(j+p) / (4 gamma_{p,q} lambda~_{p,q} dim H_{p+1,q+1}).
inline Rational herm_dual_constant(int p, int q, int j, int n) {
    const int k = p + q;
    return Rational((n + k + 1) * (n + k + 1)) * (n - j + q) * (j + p) /
           (4 * gamma_pq(p, q, n) * lambda_tilde_pq(p, q, n) * dim_H(p + 1, q + 1, n));
}

/// Dual of the projection as a bi-degree-wise scaling, with beta replaced by the grade of f.
template <class S>
HermPoly<S> herm_dual_exact(const HermPoly<S>& f, int n, std::optional<Branch> branch = std::nullopt,
                            double tol = kDefaultTolerance) {
    if (f.n() != n) throw DimensionError("herm_dual_exact: dimension mismatch");
    require_h_monogenic(f, tol);
    const auto j = pure_grade(f, tol);
    HermPoly<S> out(n);
    if (!j) return out;
    for (const auto& [d, part] : bidegree_split(f)) {
        if (branch && !in_branch(d, *branch)) continue;
        out += part.scaled(herm_dual_constant(d.p, d.q, *j, n));
    }
    return out;
}

/// Same scaling with (n - beta + q)(beta + p) applied as left multiplication by Clifford elements.
template <class S>
HermPoly<S> herm_dual_operator(const HermPoly<S>& f, int n, std::optional<Branch> branch = std::nullopt) {
    if (f.n() != n) throw DimensionError("herm_dual_operator: dimension mismatch");
    const auto beta = clifford::spin_euler<S>(n);
    const auto unit = clifford::one<S>(n);
    HermPoly<S> out(n);
    for (const auto& [d, part] : bidegree_split(f)) {
        if (branch && !in_branch(d, *branch)) continue;
        const int k = d.p + d.q;
        const auto left = (unit * from_rational<S>(Rational(n + d.q)) - beta) *
                          (beta + unit * from_rational<S>(Rational(d.p)));
        const Rational rest = Rational((n + k + 1) * (n + k + 1)) /
                              (4 * gamma_pq(d.p, d.q, n) * lambda_tilde_pq(d.p, d.q, n) * dim_H(d.p + 1, d.q + 1, n));
        out += part.left_times(left).scaled(rest);
    }
    return out;
}

inline MonteCarloResult<CliffordElement<Complex>> herm_dual_monte_carlo(const HermPoly<Complex>& f, int n,
                                                                        std::size_t samples, std::uint64_t seed,
                                                                        std::optional<Branch> branch = std::nullopt,
                                                                        unsigned workers = 0) {
    if (f.n() != n) throw DimensionError("herm_dual_monte_carlo: dimension mismatch");
    require_h_monogenic(f);
    return stiefel_average<CliffordElement<Complex>>(
        n, samples, seed,
        [&](const StiefelTuple<Complex>& tu) { return detail::project(f, tu, branch, 0.0).reconstructed; }, workers);
}

/// Euler-operator factors of the two inversion operators, as eigenvalues on bi-degree (p, q).
struct InversionFactors {
    Rational j1, j2, j3, j4;
};

/// Products taken directly from the operator definitions.
inline InversionFactors inversion_factors_literal(int p, int q, int j, int n) {
    InversionFactors f{1, 1, 1, 1};
    for (int i = n - j + 1; i <= n + 1; ++i) f.j1 *= q + i;
    for (int i = 1; i <= n - 1; ++i)
        if (i != j) f.j2 *= p + i;
    for (int i = j + 1; i <= n - 1; ++i) f.j3 *= p + i;
    for (int i = 1; i <= n - 1; ++i)
        if (i != n - j) f.j4 *= q + i;
    return f;
}

/// The tabulated eigenvalues that accompany the operators.
inline InversionFactors inversion_factors_table(int p, int q, int j, int n) {
    return {pochhammer(q + n - j + 1, j + 1), pochhammer(p + 1, n - 1) / (p + j),
            pochhammer(p + j + 1, n - j - 1), pochhammer(q + 1, n - 1) / (n - j)};
}

namespace detail {
inline void check_grade(int j, int n) {
    if (j < 1 || j >= n)
        throw DomainError("herm_invert: grade must satisfy 1 <= j < n; the projection vanishes on grades 0 and n");
}
}  // namespace detail

/// Eigenvalue of the inversion operator of a branch on bi-degree (p, q), grade j.
inline Rational inversion_eigenvalue(int p, int q, int j, int n, Branch branch) {
    detail::check_grade(j, n);
    const auto f = inversion_factors_literal(p, q, j, n);
    const Rational pre = Rational(p + q + n) / (factorial(n - 1) * factorial(n - 2));
    if (branch == Branch::p_ge_q) return pre * (q + 1) * f.j1 * (p + 1) * f.j2 * factorial(q + n - j - 1);
    return pre * (p + 1) * f.j3 * (q + 1) * f.j4 * factorial(p + j - 1);
}

/// Inversion operator of a branch applied literally: Laplace integral, then the Euler products.
template <class S>
HermPoly<S> inversion_operator(const HermPoly<S>& g, int n, int j, Branch branch) {
    detail::check_grade(j, n);
    HermPoly<S> r(g.n());
    for (const auto& [m, c] : g.terms())
        r.add_term(m, scale(c, branch == Branch::p_ge_q ? factorial(m.q() + n - j - 1) : factorial(m.p() + j - 1)));
    const bool main_side = branch == Branch::p_lt_q;  // z side carries J3 for the second branch
    r = euler_shift(r, !main_side, Rational(1));
    r = euler_shift(r, main_side, Rational(1));
    if (branch == Branch::p_ge_q) {
        for (int i = n - j + 1; i <= n + 1; ++i) r = euler_shift(r, false, Rational(i));
        for (int i = 1; i <= n - 1; ++i)
            if (i != j) r = euler_shift(r, true, Rational(i));
    } else {
        for (int i = j + 1; i <= n - 1; ++i) r = euler_shift(r, true, Rational(i));
        for (int i = 1; i <= n - 1; ++i)
            if (i != n - j) r = euler_shift(r, false, Rational(i));
    }
    HermPoly<S> out(g.n());
    for (const auto& [m, c] : r.terms()) out.add_term(m, scale(c, Rational(m.p() + m.q() + n)));
    return out.scaled(1 / (factorial(n - 1) * factorial(n - 2)));
}

/// Inversion of a dual-transformed grade-j function: each branch gets its own operator.
template <class S>
HermPoly<S> herm_invert(const HermPoly<S>& g, int n, int j, std::optional<Branch> branch = std::nullopt) {
    if (g.n() != n) throw DimensionError("herm_invert: dimension mismatch");
    detail::check_grade(j, n);
    HermPoly<S> out(n);
    for (Branch b : {Branch::p_ge_q, Branch::p_lt_q}) {
        if (branch && *branch != b) continue;
        HermPoly<S> part(n);
        for (const auto& [d, piece] : bidegree_split(g))
            if (in_branch(d, b)) part += piece;
        out += inversion_operator(part, n, j, b);
    }
    return out;
}

/// Kernel series: one quarter of the scalar Szego series times tau tau^dagger.
inline CliffordElement<Complex> herm_kernel_series(const ball::KernelParams& params, const ComplexVec<Complex>& z,
                                                   const ComplexVec<Complex>& u) {
    const auto tau = null_tau(params.tuple);
    return tau * dagger(tau) * (ball::szego_kernel_series(params, z, u).value / 4.0);
}

inline CliffordElement<Complex> herm_kernel_closed(const ball::KernelParams& params, const ComplexVec<Complex>& z,
                                                   const ComplexVec<Complex>& u) {
    const auto tau = null_tau(params.tuple);
    return tau * dagger(tau) * (ball::szego_kernel_closed(params, z, u) / 4.0);
}

/// Truncated kernel as a polynomial in z, built from hmono waves.
template <class S>
HermPoly<S> herm_kernel_polynomial(const StiefelTuple<S>& tuple, const ComplexVec<S>& u, int degree) {
    const int n = tuple.n();
    const auto tau = null_tau(tuple);
    const auto ttd = tau * dagger(tau);
    HermPoly<S> k(n);
    for (int p = 0; p <= degree; ++p)
        for (int q = 0; p + q <= degree; ++q) {
            const auto pw = ball::plane_wave(tuple, p, q);
            const S w = conj(evaluate(pw, u)) / from_rational<S>(4 * gamma_pq(p, q, n));
            k += lift(pw, ttd * w);
        }
    return k;
}

}  // namespace unitary_radon::hermitian
