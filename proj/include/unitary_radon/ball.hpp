#pragma once

#include "bipoly.hpp"
#include "combinatorics.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "hypergeometric.hpp"
#include "monte_carlo.hpp"

#include <cmath>
#include <map>
#include <optional>

namespace unitary_radon {

/// Coefficient table of a projection together with the reconstructed function.
template <class Coef, class Func>
struct Projection {
    std::map<Bidegree, Coef> coefficients;
    Func reconstructed;
};

enum class Branch { p_ge_q, p_lt_q };

inline bool in_branch(const Bidegree& d, Branch b) { return b == Branch::p_ge_q ? d.p >= d.q : d.p < d.q; }

inline constexpr double kDefaultTolerance = 1e-12;

namespace detail {

/// Zero test used when dropping coefficients and checking contracts.
template <class S>
bool negligible(const S& x, double scale, double tol) {
    if constexpr (is_exact_v<S>) {
        return is_zero(x);
    } else {
        return magnitude(x) <= tol * std::max(1.0, scale);
    }
}

}  // namespace detail

/// Throws unless laplace_z(f) vanishes (exactly, or relative to tol for floating scalars).
template <class S>
void require_harmonic(const BiPoly<S>& f, double tol = kDefaultTolerance) {
    const BiPoly<S> lap = laplace_z(f);
    const double residual = max_abs(lap);
    if constexpr (is_exact_v<S>) {
        if (!lap.is_zero()) throw ContractViolation("input is not harmonic: laplace_z(f) != 0", residual);
    } else {
        const double deg = total_degree(f) + 1.0;
        if (residual > tol * std::max(1.0, max_abs(f)) * deg * deg)
            throw ContractViolation("input is not harmonic: laplace_z(f) != 0", residual);
    }
}

namespace ball {

struct KernelParams {
    StiefelTuple<Complex> tuple;
    int p_max = 40;
    int q_max = 40;
};

/// <z, conj(s+t)>^p <zbar, s-t>^q expanded in monomials.
template <class S>
BiPoly<S> plane_wave(const StiefelTuple<S>& tuple, int p, int q) {
    if (p < 0 || q < 0) throw DomainError("plane_wave: negative degree");
    const S one = from_rational<S>(Rational(1));
    return pow(linear_form(tuple.holo_direction(), false), p, one) *
           pow(linear_form(tuple.anti_direction(), true), q, one);
}

template <class S>
S plane_wave_norm_check(const StiefelTuple<S>& tuple, int p, int q, int w, int v) {
    return sphere_inner(plane_wave(tuple, p, q), plane_wave(tuple, w, v));
}

/// Scalar arguments x, y with K(z,u) = sum x^p y^q / gamma_{p,q}.
template <class S>
std::pair<S, S> kernel_arguments(const StiefelTuple<S>& tuple, const ComplexVec<S>& z, const ComplexVec<S>& u) {
    const auto a = tuple.holo_direction();
    const auto b = tuple.anti_direction();
    const S x = bilinear_pair(z, a) * conj(bilinear_pair(u, a));
    const S y = bilinear_pair(conj(z), b) * conj(bilinear_pair(conj(u), b));
    return {x, y};
}

namespace detail {

inline void check_kernel_domain(const ComplexVec<Complex>& z, const ComplexVec<Complex>& u, Complex x, Complex y) {
    const double nz = std::sqrt(norm2(z)), nu = std::sqrt(norm2(u));
    if (nz > 1.0 + 1e-14 || nu >= 1.0) throw DomainError("szego kernel: need |z| <= 1 and |u| < 1");
    if (std::abs(x) / 2 + std::abs(y) / 2 >= 1.0) throw DomainError("szego kernel: series bound violated");
}

inline Complex closed_kernel(int n, Complex denom_terms) {
    const Complex d = 2.0 - denom_terms;
    if (std::abs(d) < 1e-14) throw SingularError("szego kernel: vanishing denominator");
    return std::pow(2.0 / d, n);
}

}  // namespace detail

inline Complex szego_kernel_closed(const KernelParams& params, const ComplexVec<Complex>& z,
                                   const ComplexVec<Complex>& u) {
    const auto [x, y] = kernel_arguments(params.tuple, z, u);
    detail::check_kernel_domain(z, u, x, y);
    return detail::closed_kernel(params.tuple.n(), x + y);
}

inline Complex holo_kernel_closed(const KernelParams& params, const ComplexVec<Complex>& z,
                                  const ComplexVec<Complex>& u) {
    const auto [x, y] = kernel_arguments(params.tuple, z, u);
    detail::check_kernel_domain(z, u, x, 0.0);
    return detail::closed_kernel(params.tuple.n(), x);
}

/// Truncated double series sum_{p<=P, q<=Q} x^p y^q / gamma_{p,q}, optionally restricted to a branch.
inline SeriesValue szego_kernel_series(const KernelParams& params, const ComplexVec<Complex>& z,
                                       const ComplexVec<Complex>& u, std::optional<Branch> branch = std::nullopt) {
    const auto [x, y] = kernel_arguments(params.tuple, z, u);
    const int n = params.tuple.n();
    SeriesValue out;
    for (int p = 0; p <= params.p_max; ++p) {
        for (int q = 0; q <= params.q_max; ++q) {
            if (branch && !in_branch({p, q}, *branch)) continue;
            const Complex term = std::pow(x, p) * std::pow(y, q) / floating::gamma_pq(p, q, n);
            out.value += term;
            if (p == params.p_max || q == params.q_max) out.last_shell = std::max(out.last_shell, std::abs(term));
        }
    }
    return out;
}

inline SeriesValue holo_kernel_series(const KernelParams& params, const ComplexVec<Complex>& z,
                                      const ComplexVec<Complex>& u) {
    KernelParams holo = params;
    holo.q_max = 0;
    return szego_kernel_series(holo, z, u);
}

/// Truncated kernel K_D(z, u) as a polynomial in z: sum over p+q <= D.
template <class S>
BiPoly<S> kernel_polynomial(const StiefelTuple<S>& tuple, const ComplexVec<S>& u, int degree) {
    BiPoly<S> k(tuple.n());
    for (int p = 0; p <= degree; ++p)
        for (int q = 0; p + q <= degree; ++q) {
            const BiPoly<S> pw = plane_wave(tuple, p, q);
            const S weight = conj(evaluate(pw, u)) / from_rational<S>(gamma_pq(p, q, tuple.n()));
            k += pw.times(weight);
        }
    return k;
}

/// Orthogonal projection onto the plane waves of the tuple.
template <class S>
Projection<S, BiPoly<S>> szego_radon(const BiPoly<S>& f, const StiefelTuple<S>& tuple,
                                     std::optional<Branch> branch = std::nullopt, double tol = kDefaultTolerance) {
    if (f.n() != tuple.n()) throw DimensionError("szego_radon: dimension mismatch");
    require_harmonic(f, tol);
    Projection<S, BiPoly<S>> out{{}, BiPoly<S>(f.n())};
    const double scale = max_abs(f);
    for (const auto& [d, part] : bidegree_split(f)) {
        if (branch && !in_branch(d, *branch)) continue;
        const BiPoly<S> pw = plane_wave(tuple, d.p, d.q);
        const S c = sphere_inner(pw, part) / from_rational<S>(gamma_pq(d.p, d.q, f.n()));
        if (unitary_radon::detail::negligible(c, scale, tol)) continue;
        out.coefficients.emplace(d, c);
        out.reconstructed += pw.times(c);
    }
    return out;
}

template <class S>
Projection<S, BiPoly<S>> szego_radon_split(const BiPoly<S>& f, const StiefelTuple<S>& tuple, Branch branch,
                                           double tol = kDefaultTolerance) {
    return szego_radon(f, tuple, branch, tol);
}

/// Split kernel of one branch: the direct restricted sum, the nominal hypergeometric form,
/// and the form obtained by re-indexing the restricted sum (H3(n,1,1; xy/4, y/2) - 2F1 for p < q).
struct SplitKernelValue {
    SeriesValue direct;
    Complex nominal;
    Complex derived;
    bool nominal_in_domain = true;
};

inline SplitKernelValue split_kernel(Branch branch, const KernelParams& params, const ComplexVec<Complex>& z,
                                     const ComplexVec<Complex>& u, int hyper_terms = 60) {
    if (std::sqrt(norm2(z)) >= 0.5 || std::sqrt(norm2(u)) >= 1.0)
        throw DomainError("split_kernel: need |z| < 1/2 and |u| < 1");
    const auto [x, y] = kernel_arguments(params.tuple, z, u);
    const Rational n(params.tuple.n());
    SplitKernelValue out;
    out.direct = szego_kernel_series(params, z, u, branch);
    if (branch == Branch::p_ge_q) {
        const auto h = horn_h3(n, 1, 1, x * y / 4.0, x / 2.0, hyper_terms);
        out.nominal = h.value;
        out.derived = h.value;
        out.nominal_in_domain = h.in_domain;
    } else {
        const auto h = horn_h3(n, 2, 2, x * y / 4.0, y / 2.0, hyper_terms);
        const auto h1 = horn_h3(n, 1, 1, x * y / 4.0, y / 2.0, hyper_terms);
        const auto f = hyp2f1(n / 2, (n + 1) / 2, 1, x * y, 4 * hyper_terms);
        out.nominal = h.value - f.value;
        out.derived = h1.value - f.value;
        out.nominal_in_domain = h.in_domain && h1.in_domain;
    }
    return out;
}

/// 1 / (gamma_{p,q} lambda_{p,q} dim H_{p,q}).
inline Rational dual_constant(int p, int q, int n) {
    return 1 / (gamma_pq(p, q, n) * lambda_pq(p, q, n) * dim_H(p, q, n));
}

/// Dual transform of the projection, averaged over all tuples, as a bi-degree-wise scaling of f.
template <class S>
BiPoly<S> dual_exact(const BiPoly<S>& f, int n, std::optional<Branch> branch = std::nullopt,
                     double tol = kDefaultTolerance) {
    if (f.n() != n) throw DimensionError("dual_exact: dimension mismatch");
    require_harmonic(f, tol);
    BiPoly<S> out(n);
    for (const auto& [d, part] : bidegree_split(f)) {
        if (branch && !in_branch(d, *branch)) continue;
        out += part.scaled(dual_constant(d.p, d.q, n));
    }
    return out;
}

inline MonteCarloResult<Complex> dual_monte_carlo(const BiPoly<Complex>& f, int n, std::size_t samples,
                                                  std::uint64_t seed, std::optional<Branch> branch = std::nullopt,
                                                  unsigned workers = 0) {
    if (f.n() != n) throw DimensionError("dual_monte_carlo: dimension mismatch");
    require_harmonic(f);
    return stiefel_average<Complex>(
        n, samples, seed,
        [&](const StiefelTuple<Complex>& tu) {
            return szego_radon(f, tu, branch, 0.0).reconstructed;
        },
        workers);
}

/// (1/Gamma(n)) (E_z + 1)...(E_z + n - 1) on holomorphic polynomials.
template <class S>
BiPoly<S> invert_holomorphic(const BiPoly<S>& g, int n) {
    if (g.n() != n) throw DimensionError("invert_holomorphic: dimension mismatch");
    if (!is_holomorphic(g)) throw ContractViolation("invert_holomorphic: input has zbar terms");
    BiPoly<S> r = g;
    for (int i = 1; i <= n - 1; ++i) r = euler_shift(r, true, Rational(i));
    return r.scaled(1 / factorial(n - 1));
}

/// Laplace-type integral of the branch: int_0^inf f(z, zbar t) e^{-t} dt for p >= q,
/// int_0^inf f(z t, zbar) e^{-t} dt for p < q; exact Gamma scaling on monomials.
template <class S>
BiPoly<S> branch_laplace(const BiPoly<S>& g, Branch branch) {
    BiPoly<S> r(g.n());
    for (const auto& [m, c] : g.terms())
        r.add_term(m, scale(c, factorial(branch == Branch::p_ge_q ? m.q() : m.p())));
    return r;
}

/// (1/(Gamma(n)Gamma(n-1))) (E + n - 1) prod_{i=1}^{n-2} (E_z + i)(E_zbar + i).
template <class S>
BiPoly<S> euler_inverse_operator(const BiPoly<S>& g, int n) {
    BiPoly<S> r(g.n());
    for (const auto& [m, c] : g.terms()) r.add_term(m, scale(c, Rational(m.p() + m.q() + n - 1)));
    for (int i = 1; i <= n - 2; ++i) {
        r = euler_shift(r, true, Rational(i));
        r = euler_shift(r, false, Rational(i));
    }
    return r.scaled(1 / (factorial(n - 1) * factorial(n - 2)));
}

template <class S>
BiPoly<S> invert_general(const BiPoly<S>& g, int n, Branch branch, double tol = kDefaultTolerance) {
    if (g.n() != n) throw DimensionError("invert_general: dimension mismatch");
    require_harmonic(g, tol);
    return euler_inverse_operator(branch_laplace(g, branch), n);
}

/// Full reconstruction f = sum over branches of T T_b dual R^(b) f.
template <class S>
BiPoly<S> reconstruct_general(const BiPoly<S>& f, int n) {
    return invert_general(dual_exact(f, n, Branch::p_ge_q), n, Branch::p_ge_q) +
           invert_general(dual_exact(f, n, Branch::p_lt_q), n, Branch::p_lt_q);
}

/// Closed form of the p < q dual constant.
inline Rational split_dual_closed_form(int p, int q, int n) {
    return factorial(n - 1) * factorial(n - 2) /
           (Rational(n + p + q - 1) * pochhammer(q + 1, n - 2) * pochhammer(p + 1, n - 2) * factorial(p));
}

}  // namespace ball
}  // namespace unitary_radon
