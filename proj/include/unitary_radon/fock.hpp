#pragma once

#include "ball.hpp"
#include "bipoly.hpp"
#include "combinatorics.hpp"
#include "monte_carlo.hpp"

#include <cmath>

namespace unitary_radon::fock {

/// Polynomial element of the Segal-Bargmann-Fock space (no zbar dependence).
template <class S>
class FockElement {
public:
    explicit FockElement(int n) : poly_(n) {}
    explicit FockElement(BiPoly<S> poly) : poly_(std::move(poly)) {
        if (!is_holomorphic(poly_)) throw ContractViolation("Fock element must be holomorphic");
    }

    const BiPoly<S>& poly() const { return poly_; }
    int n() const { return poly_.n(); }

    friend bool operator==(const FockElement& a, const FockElement& b) { return a.poly_ == b.poly_; }

private:
    BiPoly<S> poly_;
};

template <class S>
S fock_inner(const FockElement<S>& p, const FockElement<S>& q) {
    return fischer(p.poly(), q.poly());
}

/// Squared Fock norm 2^p p! of the entire plane wave of degree p.
inline Rational mu(int p) { return pow2(p) * factorial(p); }

template <class S>
FockElement<S> entire_plane_wave(const StiefelTuple<S>& tuple, int p) {
    return FockElement<S>(ball::plane_wave(tuple, p, 0));
}

inline Complex bargmann_kernel(const StiefelTuple<Complex>& tuple, const ComplexVec<Complex>& z,
                               const ComplexVec<Complex>& w) {
    const auto a = tuple.holo_direction();
    return std::exp(bilinear_pair(z, a) * std::conj(bilinear_pair(w, a)) / 2.0);
}

inline SeriesValue bargmann_kernel_series(const StiefelTuple<Complex>& tuple, const ComplexVec<Complex>& z,
                                          const ComplexVec<Complex>& w, int terms = 60) {
    const auto a = tuple.holo_direction();
    const Complex x = bilinear_pair(z, a) * std::conj(bilinear_pair(w, a));
    SeriesValue out;
    Complex term = 1.0;
    for (int p = 0; p <= terms; ++p) {
        if (p > 0) term *= x / (2.0 * p);
        out.value += term;
    }
    out.last_shell = std::abs(term);
    return out;
}

/// Orthogonal projection onto the entire plane waves of the tuple; keys are (p, 0).
template <class S>
Projection<S, FockElement<S>> bargmann_radon(const FockElement<S>& f, const StiefelTuple<S>& tuple,
                                             double tol = kDefaultTolerance) {
    if (f.n() != tuple.n()) throw DimensionError("bargmann_radon: dimension mismatch");
    BiPoly<S> rec(f.n());
    std::map<Bidegree, S> coefficients;
    const double scale = max_abs(f.poly());
    for (const auto& [d, part] : bidegree_split(f.poly())) {
        const BiPoly<S> pw = ball::plane_wave(tuple, d.p, 0);
        const S c = fischer(pw, part) / from_rational<S>(mu(d.p));
        if (unitary_radon::detail::negligible(c, scale, tol)) continue;
        coefficients.emplace(d, c);
        rec += pw.times(c);
    }
    return {std::move(coefficients), FockElement<S>(std::move(rec))};
}

/// Gamma(n) Gamma(p+1) / Gamma(n+p).
inline Rational fock_dual_constant(int p, int n) { return factorial(n - 1) * factorial(p) / factorial(n + p - 1); }

template <class S>
FockElement<S> fock_dual_exact(const FockElement<S>& f, int n) {
    if (f.n() != n) throw DimensionError("fock_dual_exact: dimension mismatch");
    BiPoly<S> out(n);
    for (const auto& [d, part] : bidegree_split(f.poly())) out += part.scaled(fock_dual_constant(d.p, n));
    return FockElement<S>(std::move(out));
}

inline MonteCarloResult<Complex> fock_dual_monte_carlo(const FockElement<Complex>& f, int n, std::size_t samples,
                                                       std::uint64_t seed, unsigned workers = 0) {
    if (f.n() != n) throw DimensionError("fock_dual_monte_carlo: dimension mismatch");
    return stiefel_average<Complex>(
        n, samples, seed,
        [&](const StiefelTuple<Complex>& tu) { return bargmann_radon(f, tu, 0.0).reconstructed.poly(); }, workers);
}

template <class S>
FockElement<S> fock_invert(const FockElement<S>& g, int n) {
    return FockElement<S>(ball::invert_holomorphic(g.poly(), n));
}

}  // namespace unitary_radon::fock
