#pragma once

#include "ball.hpp"
#include "clifford.hpp"
#include "fock.hpp"
#include "hermitian.hpp"
#include "realspace.hpp"
#include "sampling.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

/// Invariant checks shared by the command-line verifier and the acceptance runner.
namespace unitary_radon::verify {

/// One measured property. Non-gating checks are discrepancy reports: shown, never fatal.
struct Check {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
    bool gate = true;
};

inline bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || !c.gate; });
}

namespace detail {

using Q = GaussRational;

/// Exact check: measured is the number of failing cases.
inline Check count_check(std::string name, int failures, int cases, std::string first_failure = {}) {
    Check c{std::move(name), failures == 0, double(failures), 0.0, {}, true};
    std::ostringstream os;
    os << failures << " of " << cases << " cases failed";
    if (!first_failure.empty()) os << "; first: " << first_failure;
    c.detail = os.str();
    return c;
}

inline Check bound_check(std::string name, double measured, double tolerance, std::string detail) {
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    return {std::move(name), ok, measured, tolerance, std::move(detail), true};
}

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

inline std::string pq_label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

/// Largest |mean - exact| / standard error over every monomial and coefficient component.
template <class C>
double max_sigma(const MonteCarloResult<C>& mc, const BiPoly<C>& exact) {
    using Codec = component_codec<C>;
    std::set<Monomial> keys;
    for (const auto& [m, c] : exact.terms()) keys.insert(m);
    for (const auto& [m, c] : mc.mean.terms()) keys.insert(m);
    double worst = 0.0;
    for (const auto& m : keys) {
        const auto e = Codec::encode(exact.coefficient(m));
        const auto g = Codec::encode(mc.mean.coefficient(m));
        const auto it = mc.standard_error.find(m);
        const std::size_t comps = std::max(e.size(), g.size());
        for (std::size_t k = 0; k < comps; ++k) {
            const Complex ek = k < e.size() ? e[k] : Complex{};
            const Complex gk = k < g.size() ? g[k] : Complex{};
            const double se = it == mc.standard_error.end() || k >= it->second.size() ? 0.0 : it->second[k];
            const double diff = std::abs(gk - ek);
            if (diff == 0.0) continue;
            worst = std::max(worst, se > 0.0 ? diff / se : std::numeric_limits<double>::infinity());
        }
    }
    return worst;
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// Orthogonality tables

inline Check sphere_gram(int n, int max_pq, std::uint64_t seed) {
    const auto tu = rational_stiefel(n, seed);
    std::vector<std::pair<Bidegree, BiPoly<detail::Q>>> waves;
    for (int p = 0; p <= max_pq; ++p)
        for (int q = 0; q <= max_pq; ++q) waves.push_back({{p, q}, ball::plane_wave(tu, p, q)});
    int failures = 0, cases = 0;
    std::string first;
    for (const auto& [a, fa] : waves)
        for (const auto& [b, fb] : waves) {
            ++cases;
            const detail::Q expect = a == b ? detail::Q(gamma_pq(a.p, a.q, n)) : detail::Q(0);
            if (sphere_inner(fa, fb) != expect && failures++ == 0)
                first = detail::pq_label(a.p, a.q) + " x " + detail::pq_label(b.p, b.q);
        }
    return detail::count_check("sphere Gram of plane waves, n=" + std::to_string(n), failures, cases, first);
}

inline Check fock_gram(int n, int max_p, std::uint64_t seed) {
    const auto tu = rational_stiefel(n, seed);
    int failures = 0, cases = 0;
    for (int p = 0; p <= max_p; ++p)
        for (int r = 0; r <= max_p; ++r) {
            ++cases;
            const auto g = fock::fock_inner(fock::entire_plane_wave(tu, p), fock::entire_plane_wave(tu, r));
            if (g != (p == r ? detail::Q(fock::mu(p)) : detail::Q(0))) ++failures;
        }
    return detail::count_check("Fock Gram of entire plane waves = 2^p p!, n=" + std::to_string(n), failures, cases);
}

inline Check l2_gram(int n, int max_k, std::uint64_t seed) {
    const auto tu = rational_stiefel(n, seed);
    int failures = 0, cases = 0;
    for (int k = 0; k <= max_k; ++k)
        for (int l = 0; l <= max_k; ++l) {
            ++cases;
            const auto wk = realspace::tuple_wave(tu, k), wl = realspace::tuple_wave(tu, l);
            const auto direct = realspace::l2_inner(wk, wl);
            const auto via_fock = fock::fock_inner(realspace::segal_bargmann(wk), realspace::segal_bargmann(wl));
            const detail::Q expect = k == l ? detail::Q(realspace::tuple_wave_norm(k)) : detail::Q(0);
            if (direct != expect || via_fock != expect) ++failures;
        }
    return detail::count_check("L2 Gram of tuple waves = 2^k k!, n=" + std::to_string(n), failures, cases);
}

// ---------------------------------------------------------------------------------------------
// Kernel closed forms

inline Check ball_kernel_agreement(int n, bool holomorphic, int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const ball::KernelParams params{sample_stiefel(n, derive_seed(seed, i)), 40, 40};
        const auto z = sampling::random_point(rng, n, 0.3), u = sampling::random_point(rng, n, 0.3);
        const Complex series = holomorphic ? ball::holo_kernel_series(params, z, u).value
                                           : ball::szego_kernel_series(params, z, u).value;
        const Complex closed =
            holomorphic ? ball::holo_kernel_closed(params, z, u) : ball::szego_kernel_closed(params, z, u);
        worst = std::max(worst, detail::rel_err(series, closed));
    }
    return detail::bound_check(std::string(holomorphic ? "holomorphic" : "harmonic") +
                                   " Szego kernel series vs closed form, n=" + std::to_string(n),
                               worst, 1e-10, "max relative error over " + std::to_string(points) + " points");
}

inline Check fock_kernel_agreement(int n, int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const auto tu = sample_stiefel(n, derive_seed(seed, i));
        const auto z = sampling::random_point(rng, n, 0.3), u = sampling::random_point(rng, n, 0.3);
        worst = std::max(worst,
                         detail::rel_err(fock::bargmann_kernel_series(tu, z, u).value, fock::bargmann_kernel(tu, z, u)));
    }
    return detail::bound_check("Fock kernel series vs exponential, n=" + std::to_string(n), worst, 1e-10,
                               "max relative error over " + std::to_string(points) + " points");
}

// ---------------------------------------------------------------------------------------------
// Split kernels

/// Each branch against an independent restricted sum of plane-wave products, and the branches summing to the full series.
inline Check split_kernel_partition(int n, int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const ball::KernelParams params{sample_stiefel(n, derive_seed(seed, i)), 40, 40};
        const auto z = sampling::random_point(rng, n, 0.3), u = sampling::random_point(rng, n, 0.3);
        const auto& tu = params.tuple;
        const Complex az = bilinear_pair(z, tu.holo_direction()), bz = bilinear_pair(conj(z), tu.anti_direction());
        const Complex au = bilinear_pair(u, tu.holo_direction()), bu = bilinear_pair(conj(u), tu.anti_direction());
        Complex restricted[2] = {0.0, 0.0};
        for (int p = 0; p <= 40; ++p)
            for (int q = 0; q <= 40; ++q) {
                const Complex wz = std::pow(az, p) * std::pow(bz, q), wu = std::pow(au, p) * std::pow(bu, q);
                restricted[p >= q ? 0 : 1] += wz * std::conj(wu) / floating::gamma_pq(p, q, n);
            }
        const auto first = ball::split_kernel(Branch::p_ge_q, params, z, u);
        const auto second = ball::split_kernel(Branch::p_lt_q, params, z, u);
        const Complex full = ball::szego_kernel_series(params, z, u).value;
        worst = std::max({worst, detail::rel_err(first.direct.value, restricted[0]),
                          detail::rel_err(second.direct.value, restricted[1]),
                          detail::rel_err(first.direct.value + second.direct.value, full)});
    }
    return detail::bound_check("split kernels vs restricted sums and full series, n=" + std::to_string(n), worst,
                               1e-10, "max relative error over " + std::to_string(points) + " points");
}

/// Printed hypergeometric form of a branch against the direct restricted sum; a report, never a gate.
inline Check split_kernel_nominal(int n, Branch branch, int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0.0, worst_derived = 0.0;
    int compared = 0;
    for (int i = 0; i < points; ++i) {
        const ball::KernelParams params{sample_stiefel(n, derive_seed(seed, i)), 40, 40};
        const auto z = sampling::random_point(rng, n, 0.3), u = sampling::random_point(rng, n, 0.3);
        const auto v = ball::split_kernel(branch, params, z, u);
        if (!v.nominal_in_domain) continue;
        ++compared;
        worst = std::max(worst, detail::rel_err(v.nominal, v.direct.value));
        worst_derived = std::max(worst_derived, detail::rel_err(v.derived, v.direct.value));
    }
    Check c{std::string("nominal hypergeometric form, ") + (branch == Branch::p_ge_q ? "p>=q" : "p<q") +
                " branch, n=" + std::to_string(n),
            worst <= 1e-8, worst, 1e-8, {}, false};
    std::ostringstream os;
    os << "max relative deviation over " << compared << " in-domain points";
    if (!c.passed)
        os << "; nominal form does not reproduce the direct sum; re-indexed H3(n,1,1; xy/4, y/2) - 2F1 deviates by "
           << worst_derived;
    c.detail = os.str();
    return c;
}

// ---------------------------------------------------------------------------------------------
// Projection laws

template <class F, class P, class I>
Check projection_laws(const std::string& name, int trials, std::uint64_t seed, F make_input, P project, I inner) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + t % 2;
        const auto tu = rational_stiefel(n, derive_seed(seed, t));
        const auto f = make_input(rng, n, t), g = make_input(rng, n, t);
        const auto pf = project(f, tu);
        const bool idempotent = project(pf, tu) == pf;
        const bool self_adjoint = inner(pf, g) == inner(f, project(g, tu));
        if (!idempotent || !self_adjoint) ++failures;
    }
    return detail::count_check(name + ": idempotent and self-adjoint", failures, trials);
}

inline Check szego_projection_laws(int trials, int max_degree, std::uint64_t seed) {
    return projection_laws(
        "harmonic Szego-Radon projection", trials, seed,
        [&](std::mt19937_64& rng, int n, int) { return sampling::random_harmonic(rng, n, max_degree); },
        [](const auto& f, const auto& tu) { return ball::szego_radon(f, tu).reconstructed; },
        [](const auto& a, const auto& b) { return sphere_inner(a, b); });
}

inline Check bargmann_projection_laws(int trials, int max_degree, std::uint64_t seed) {
    return projection_laws(
        "Bargmann-Radon projection", trials, seed,
        [&](std::mt19937_64& rng, int n, int) {
            return fock::FockElement<detail::Q>(sampling::random_holomorphic(rng, n, max_degree));
        },
        [](const auto& f, const auto& tu) { return fock::bargmann_radon(f, tu).reconstructed; },
        [](const auto& a, const auto& b) { return fock::fock_inner(a, b); });
}

inline Check l2_projection_laws(int trials, int max_degree, std::uint64_t seed) {
    return projection_laws(
        "L2 Radon projection", trials, seed,
        [&](std::mt19937_64& rng, int n, int) { return sampling::random_expansion(rng, n, max_degree); },
        [](const auto& f, const auto& tu) { return realspace::l2_radon(f, tu).reconstructed; },
        [](const auto& a, const auto& b) { return realspace::l2_inner(a, b); });
}

inline Check herm_projection_laws(int trials, int max_degree, std::uint64_t seed) {
    return projection_laws(
        "Hermitian Szego-Radon projection", trials, seed,
        [&](std::mt19937_64& rng, int n, int t) {
            return sampling::random_hmonogenic(rng, n, 1 + t % (n - 1), max_degree);
        },
        [](const auto& f, const auto& tu) { return hermitian::herm_radon(f, tu).reconstructed; },
        [](const auto& a, const auto& b) { return hermitian::herm_inner(a, b); });
}

// ---------------------------------------------------------------------------------------------
// Dual-transform constants against Monte-Carlo Stiefel integration

inline std::string mc_detail(std::size_t samples, std::uint64_t seed) {
    return "max deviation in standard errors, N=" + std::to_string(samples) + ", seed " + std::to_string(seed);
}

/// Harmonic input with one basis element per bi-degree p+q <= max_total.
inline Check ball_dual_monte_carlo(int n, int max_total, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BiPoly<Complex> f(n);
    for (int p = 0; p <= max_total; ++p)
        for (int q = 0; p + q <= max_total; ++q)
            f += convert<Complex>(harmonic_basis(p, q, n).front().times(sampling::random_gauss(rng)),
                                  [](const detail::Q& c) { return to_complex(c); });
    const auto mc = ball::dual_monte_carlo(f, n, samples, seed);
    return detail::bound_check("harmonic dual constant vs Monte-Carlo, p+q<=" + std::to_string(max_total) +
                                   ", n=" + std::to_string(n),
                               detail::max_sigma(mc, ball::dual_exact(f, n)), 3.0, mc_detail(samples, seed));
}

/// Ratio of the Monte-Carlo dual to the nominal constant at a single bi-degree; a report.
inline Check ball_dual_ratio(int n, int p, int q, std::size_t samples, std::uint64_t seed) {
    const auto f = convert<Complex>(harmonic_basis(p, q, n).front(), [](const detail::Q& c) { return to_complex(c); });
    const auto mc = ball::dual_monte_carlo(f, n, samples, seed);
    const auto exact = ball::dual_exact(f, n);
    const auto& [m, c] = *std::max_element(exact.terms().begin(), exact.terms().end(), [](const auto& a, const auto& b) {
        return std::abs(a.second) < std::abs(b.second);
    });
    const double ratio = std::abs(mc.mean.coefficient(m) / c);
    const double se = mc.standard_error.at(m)[0] / std::abs(c);
    Check out{"harmonic dual constant at " + detail::pq_label(p, q) + ", n=" + std::to_string(n), std::abs(ratio - 1) <= 3 * se,
              ratio, 3 * se, {}, false};
    std::ostringstream os;
    os << "Monte-Carlo / nominal constant = " << ratio << " +- " << se;
    if (!out.passed) os << "; nominal constant misses a factor min(p,q)! = " << factorial(std::min(p, q));
    out.detail = os.str();
    return out;
}

inline Check fock_dual_monte_carlo(int n, int max_p, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BiPoly<Complex> f(n);
    for (int p = 0; p <= max_p; ++p)
        f += convert<Complex>(harmonic_basis(p, 0, n).front().times(sampling::random_gauss(rng)),
                              [](const detail::Q& c) { return to_complex(c); });
    const fock::FockElement<Complex> fe(f);
    const auto mc = fock::fock_dual_monte_carlo(fe, n, samples, seed);
    int identity_failures = 0;
    for (int p = 0; p <= 8; ++p)
        if (fock::fock_dual_constant(p, n) != factorial(n - 1) * factorial(p) / factorial(n + p - 1)) ++identity_failures;
    auto c = detail::bound_check("Fock dual constant vs Monte-Carlo, p<=" + std::to_string(max_p) + ", n=" + std::to_string(n),
                                 detail::max_sigma(mc, fock::fock_dual_exact(fe, n).poly()), 3.0, mc_detail(samples, seed));
    if (identity_failures) {
        c.passed = false;
        c.detail += "; Gamma-form identity failed";
    }
    return c;
}

/// Grade-j spinor-weighted plane waves for every p+q <= max_total.
inline hermitian::HermPoly<Complex> herm_dual_input(int n, int j, int max_total, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto tu = to_complex(rational_stiefel(n, seed));
    hermitian::HermPoly<Complex> f(n);
    for (int p = 0; p <= max_total; ++p)
        for (int q = 0; p + q <= max_total; ++q)
            f += hermitian::hmono_wave(tu, p, q).times(to_complex(sampling::random_spinor(rng, n, j)));
    return f;
}

inline Check herm_dual_monte_carlo(int n, int j, int max_total, std::size_t samples, std::uint64_t seed) {
    const auto f = herm_dual_input(n, j, max_total, seed);
    const auto mc = hermitian::herm_dual_monte_carlo(f, n, samples, seed);
    auto c = detail::bound_check("Hermitian dual constant vs Monte-Carlo, p+q<=" + std::to_string(max_total) +
                                     ", grade " + std::to_string(j) + ", n=" + std::to_string(n),
                                 detail::max_sigma(mc, hermitian::herm_dual_exact(f, n)), 3.0, mc_detail(samples, seed));
    if (!c.passed) {
        // Per-bi-degree ratio of Monte-Carlo to nominal constant.
        std::ostringstream os;
        os << "; Monte-Carlo/nominal per bi-degree:";
        for (const auto& [d, part] : bidegree_split(hermitian::herm_dual_exact(f, n))) {
            const auto& [m, cl] = *part.terms().begin();
            std::uint32_t best = 0;
            for (std::uint32_t b = 0; b < cl.blade_count(); ++b)
                if (std::abs(cl[b]) > std::abs(cl[best])) best = b;
            os << ' ' << detail::pq_label(d.p, d.q) << '=' << std::abs(mc.mean.coefficient(m)[best] / cl[best]);
        }
        c.detail += os.str();
    }
    return c;
}

// ---------------------------------------------------------------------------------------------
// Inversion round trips

template <class Make, class Trip>
Check round_trip(const std::string& name, int trials, std::uint64_t seed, Make make, Trip trip) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + t % 2;
        const auto f = make(rng, n, t);
        if (!(trip(f, n, t) == f)) ++failures;
    }
    return detail::count_check(name, failures, trials);
}

inline Check holomorphic_round_trip(int trials, int max_degree, std::uint64_t seed) {
    return round_trip(
        "holomorphic inversion round trip", trials, seed,
        [&](std::mt19937_64& rng, int n, int) { return sampling::random_holomorphic(rng, n, max_degree); },
        [](const auto& f, int n, int) { return ball::invert_holomorphic(ball::dual_exact(f, n), n); });
}

inline Check harmonic_round_trip(int trials, int max_degree, std::uint64_t seed) {
    return round_trip(
        "harmonic inversion round trip, both branches", trials, seed,
        [&](std::mt19937_64& rng, int n, int) { return sampling::random_harmonic(rng, n, max_degree); },
        [](const auto& f, int n, int) { return ball::reconstruct_general(f, n); });
}

inline Check fock_round_trip(int trials, int max_degree, std::uint64_t seed) {
    return round_trip(
        "Fock inversion round trip", trials, seed,
        [&](std::mt19937_64& rng, int n, int) {
            return fock::FockElement<detail::Q>(sampling::random_holomorphic(rng, n, max_degree));
        },
        [](const auto& f, int n, int) { return fock::fock_invert(fock::fock_dual_exact(f, n), n); });
}

inline Check l2_round_trip(int trials, int max_degree, std::uint64_t seed) {
    return round_trip(
        "L2 inversion round trip", trials, seed,
        [&](std::mt19937_64& rng, int n, int) { return sampling::random_expansion(rng, n, max_degree); },
        [](const auto& f, int n, int) { return realspace::l2_invert(realspace::l2_dual_exact(f, n), n); });
}

/// Hermitian round trip restricted to one branch, or over both when branch is empty.
inline Check herm_round_trip(int trials, int max_degree, std::uint64_t seed, std::optional<Branch> branch) {
    const std::string label = !branch ? "both branches" : *branch == Branch::p_ge_q ? "p>=q branch" : "p<q branch";
    return round_trip(
        "Hermitian inversion round trip, " + label, trials, seed,
        [&](std::mt19937_64& rng, int n, int t) {
            auto f = sampling::random_hmonogenic(rng, n, 1 + t % (n - 1), max_degree);
            if (!branch) return f;
            hermitian::HermPoly<detail::Q> part(n);
            for (const auto& [d, piece] : bidegree_split(f))
                if (in_branch(d, *branch)) part += piece;
            return part;
        },
        [&](const auto& f, int n, int t) {
            const int j = 1 + t % (n - 1);
            return hermitian::herm_invert(hermitian::herm_dual_exact(f, n, branch), n, j, branch);
        });
}

// ---------------------------------------------------------------------------------------------
// Clifford identities

inline Check clifford_identities(int n) {
    using Cl = CliffordElement<detail::Q>;
    int failures = 0, cases = 0;
    auto expect = [&](bool ok) {
        ++cases;
        if (!ok) ++failures;
    };
    const auto unit = clifford::one<detail::Q>(n);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * n; ++j) {
            const auto ei = Cl::generator(n, i), ej = Cl::generator(n, j);
            expect(ei * ej + ej * ei == unit * detail::Q(i == j ? -2 : 0));
        }
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            const auto fj = clifford::witt<detail::Q>(n, j, false), fk = clifford::witt<detail::Q>(n, k, false);
            const auto fjd = clifford::witt<detail::Q>(n, j, true), fkd = clifford::witt<detail::Q>(n, k, true);
            expect((fj * fk + fk * fj).is_zero());
            expect((fjd * fkd + fkd * fjd).is_zero());
            expect(fj * fkd + fkd * fj == unit * detail::Q(j == k ? 1 : 0));
        }
    const auto I = clifford::idempotent<detail::Q>(n);
    expect(I * I == I);
    const auto beta = clifford::spin_euler<detail::Q>(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto s = clifford::spinor_basis<detail::Q>(n, mask);
        expect(beta * s == s * detail::Q(std::popcount(mask)));
    }
    return detail::count_check("Witt, idempotent and spin-Euler identities, n=" + std::to_string(n), failures, cases);
}

inline Check null_tau_identities(int n, int tuples, std::uint64_t seed) {
    int failures = 0;
    for (int i = 0; i < tuples; ++i) {
        const auto tau = hermitian::null_tau(rational_stiefel(n, derive_seed(seed, i)));
        if (!(tau * tau).is_zero() || !(tau * dagger(tau) * tau == tau * detail::Q(4))) ++failures;
    }
    return detail::count_check("tau^2 = 0 and tau tau^dagger tau = 4 tau, n=" + std::to_string(n), failures, tuples);
}

inline Check hmono_dirac_residuals(int n, int max_total, std::uint64_t seed) {
    const auto tu = rational_stiefel(n, seed);
    int failures = 0, cases = 0;
    for (int p = 0; p <= max_total; ++p)
        for (int q = 0; p + q <= max_total; ++q) {
            ++cases;
            const auto w = hermitian::hmono_wave(tu, p, q);
            if (!hermitian::dirac_z(w).is_zero() || !hermitian::dirac_zdag(w).is_zero()) ++failures;
        }
    return detail::count_check("both Dirac residuals of hmono waves vanish, n=" + std::to_string(n), failures, cases);
}

inline Check herm_norm_table(int n, int max_pq, std::uint64_t seed) {
    const auto tu = rational_stiefel(n, seed);
    const auto tau = hermitian::null_tau(tu);
    const auto ttd = dagger(tau) * tau;
    std::vector<std::pair<Bidegree, hermitian::HermPoly<detail::Q>>> waves;
    for (int p = 0; p <= max_pq; ++p)
        for (int q = 0; q <= max_pq; ++q) waves.push_back({{p, q}, hermitian::hmono_wave(tu, p, q)});
    int failures = 0, cases = 0;
    for (const auto& [a, fa] : waves)
        for (const auto& [b, fb] : waves) {
            ++cases;
            const auto g = hermitian::herm_inner(fa, fb);
            if (!(a == b ? g == ttd * detail::Q(gamma_pq(a.p, a.q, n)) : g.is_zero())) ++failures;
        }
    return detail::count_check("Hermitian norm table gamma tau^dagger tau, n=" + std::to_string(n), failures, cases);
}

// ---------------------------------------------------------------------------------------------
// Cross-module consistency

inline Check commuting_square(int trials, int max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + t % 2;
        const auto tu = rational_stiefel(n, derive_seed(seed, t));
        const auto f = sampling::random_expansion(rng, n, max_degree);
        const auto direct = realspace::l2_radon(f, tu);
        const auto through = fock::bargmann_radon(realspace::segal_bargmann(f), tu);
        std::map<Bidegree, detail::Q> direct_coeffs(direct.coefficients.begin(), direct.coefficients.end());
        if (direct_coeffs != through.coefficients ||
            realspace::segal_bargmann(direct.reconstructed) != through.reconstructed)
            ++failures;
    }
    return detail::count_check("L2 projection = Segal-Bargmann conjugate of Fock projection", failures, trials);
}

inline Check herm_kernel_factor(int n, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto tu = rational_stiefel(n, seed);
    ComplexVec<detail::Q> u(n);
    for (auto& x : u) x = sampling::random_gauss(rng) * detail::Q(Rational(1) / 8);
    const auto tau = hermitian::null_tau(tu);
    const auto expected = hermitian::lift(ball::kernel_polynomial(tu, u, degree), tau * dagger(tau) * detail::Q(Rational(1) / 4));
    const bool ok = hermitian::herm_kernel_polynomial(tu, u, degree) == expected;
    return detail::count_check("Hermitian kernel = quarter Szego kernel times tau tau^dagger, n=" + std::to_string(n),
                               ok ? 0 : 1, 1);
}

inline Check mehler_oracle(int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double x = u(rng), y = u(rng);
        const double closed = realspace::mehler_closed(0.5, x, y);
        worst = std::max(worst, std::abs(realspace::mehler_series(0.5, x, y, 60) - closed) / std::abs(closed));
    }
    return detail::bound_check("1-d Mehler series vs closed form, rho=1/2", worst, 1e-8,
                               "max relative error over " + std::to_string(points) + " points");
}

// ---------------------------------------------------------------------------------------------
// Constant identities

inline Check gamma_lambda_identity(int n_max, int max_pq) {
    int failures = 0, cases = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int p = 0; p <= max_pq; ++p)
            for (int q = 0; q <= max_pq; ++q) {
                ++cases;
                const Rational rhs = factorial(p) * factorial(q) / factorial(p + q - std::min(p, q));
                if (gamma_pq(p, q, n) * lambda_pq(p, q, n) != rhs) ++failures;
            }
    return detail::count_check("gamma lambda = p! q! / (k - nu)!", failures, cases);
}

inline Check second_branch_closed_form(int n_max, int max_pq) {
    int failures = 0, cases = 0;
    for (int n = 2; n <= n_max; ++n)
        for (int p = 0; p <= max_pq; ++p)
            for (int q = p + 1; q <= max_pq; ++q) {
                ++cases;
                if (ball::split_dual_closed_form(p, q, n) != ball::dual_constant(p, q, n)) ++failures;
            }
    return detail::count_check("p<q dual constant closed form", failures, cases);
}

/// Dual constant times inversion eigenvalue on one branch; anything other than 1 is a named discrepancy.
inline Check herm_constant_products(int n_max, int max_pq, Branch branch) {
    int failures = 0, cases = 0;
    std::string first;
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j < n; ++j)
            for (int p = 0; p <= max_pq; ++p)
                for (int q = 0; q <= max_pq; ++q) {
                    if (!in_branch({p, q}, branch)) continue;
                    ++cases;
                    const Rational prod =
                        hermitian::herm_dual_constant(p, q, j, n) * hermitian::inversion_eigenvalue(p, q, j, n, branch);
                    if (prod != 1 && failures++ == 0)
                        first = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " " + detail::pq_label(p, q) +
                                " product " + prod.get_str();
                }
    auto c = detail::count_check(std::string("Hermitian dual x inversion eigenvalue = 1, ") +
                                     (branch == Branch::p_ge_q ? "p>=q" : "p<q") + " branch",
                                 failures, cases, first);
    if (failures && branch == Branch::p_ge_q) c.detail += "; discrepancy: product equals (q+n)(q+n+1)";
    return c;
}

// ---------------------------------------------------------------------------------------------
// Per-space suites for the command-line verifier

struct SuiteOptions {
    int n = 2;
    int max_degree = 4;
    std::uint64_t seed = 1;
    std::size_t samples = 20000;
    int trials = 10;
};

inline std::vector<Check> run_space_suite(const std::string& space, const SuiteOptions& o) {
    std::vector<Check> out;
    const int d = o.max_degree;
    if (space == "ball-harmonic") {
        out.push_back(sphere_gram(o.n, std::min(d, 4), o.seed));
        out.push_back(ball_kernel_agreement(o.n, false, 20, o.seed));
        out.push_back(split_kernel_partition(o.n, 10, o.seed));
        out.push_back(szego_projection_laws(o.trials, d, o.seed));
        out.push_back(harmonic_round_trip(o.trials, d, o.seed));
        out.push_back(gamma_lambda_identity(3, std::min(d, 4)));
        out.push_back(second_branch_closed_form(3, std::min(d, 4)));
    } else if (space == "ball-holomorphic") {
        out.push_back(ball_kernel_agreement(o.n, true, 20, o.seed));
        out.push_back(holomorphic_round_trip(o.trials, d, o.seed));
    } else if (space == "fock") {
        out.push_back(fock_gram(o.n, 2 * d, o.seed));
        out.push_back(fock_kernel_agreement(o.n, 20, o.seed));
        out.push_back(bargmann_projection_laws(o.trials, d, o.seed));
        out.push_back(fock_round_trip(o.trials, d, o.seed));
    } else if (space == "l2") {
        out.push_back(l2_gram(o.n, 2 * d, o.seed));
        out.push_back(l2_projection_laws(o.trials, d, o.seed));
        out.push_back(commuting_square(o.trials, d, o.seed));
        out.push_back(l2_round_trip(o.trials, d, o.seed));
        out.push_back(mehler_oracle(50, o.seed));
    } else if (space == "hermitian") {
        const int hd = std::min(d, 3);
        out.push_back(clifford_identities(o.n));
        out.push_back(null_tau_identities(o.n, 20, o.seed));
        out.push_back(hmono_dirac_residuals(o.n, hd + 2, o.seed));
        out.push_back(herm_norm_table(o.n, std::min(hd, 2), o.seed));
        out.push_back(herm_projection_laws(o.trials, hd, o.seed));
        out.push_back(herm_kernel_factor(o.n, hd, o.seed));
        out.push_back(herm_round_trip(o.trials, hd, o.seed, Branch::p_lt_q));
        out.push_back(herm_round_trip(o.trials, hd, o.seed, Branch::p_ge_q));
        out.push_back(herm_constant_products(3, hd, Branch::p_lt_q));
        out.push_back(herm_constant_products(3, hd, Branch::p_ge_q));
    } else {
        throw std::invalid_argument("unknown space: " + space);
    }
    return out;
}

}  // namespace unitary_radon::verify
