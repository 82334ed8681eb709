#pragma once

#include "ball.hpp"
#include "harmonic.hpp"
#include "hermitian.hpp"
#include "realspace.hpp"

#include <bit>
#include <random>

/// Seeded random inputs for property checks: every generator is deterministic in its engine state.
namespace unitary_radon::sampling {

inline GaussRational random_gauss(std::mt19937_64& rng, int spread = 3) {
    std::uniform_int_distribution<int> d(-spread, spread);
    return {Rational(d(rng)), Rational(d(rng))};
}

/// Random combination of harmonic basis elements over bi-degrees with p+q <= max_degree.
inline BiPoly<GaussRational> random_harmonic(std::mt19937_64& rng, int n, int max_degree, int components = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    BiPoly<GaussRational> f(n);
    for (int c = 0; c < components; ++c) {
        const int k = deg(rng);
        std::uniform_int_distribution<int> split(0, k);
        const int p = split(rng);
        for (const auto& h : harmonic_basis(p, k - p, n)) f += h.times(random_gauss(rng));
    }
    return f;
}

inline BiPoly<GaussRational> random_holomorphic(std::mt19937_64& rng, int n, int max_degree, int components = 5) {
    BiPoly<GaussRational> f(n);
    std::uniform_int_distribution<int> deg(0, max_degree);
    for (int c = 0; c < components; ++c) {
        const int k = deg(rng);
        for (const auto& h : harmonic_basis(k, 0, n)) f += h.times(random_gauss(rng));
    }
    return f;
}

inline realspace::HermiteExpansion<GaussRational> random_expansion(std::mt19937_64& rng, int n, int max_degree,
                                                                   int terms = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    realspace::HermiteExpansion<GaussRational> e(n);
    for (int t = 0; t < terms; ++t) {
        const auto idx = multi_indices(n, deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, idx.size() - 1);
        e.add(idx[pick(rng)], random_gauss(rng));
    }
    return e;
}

/// Point with uniformly drawn radius below the given bound and uniform direction.
inline ComplexVec<Complex> random_point(std::mt19937_64& rng, int n, double radius) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> r(0.0, radius);
    ComplexVec<Complex> z(n);
    double nn = 0.0;
    for (auto& x : z) {
        x = {g(rng), g(rng)};
        nn += std::norm(x);
    }
    const double target = r(rng);
    for (auto& x : z) x *= target / std::sqrt(nn);
    return z;
}

inline CliffordElement<GaussRational> random_clifford(std::mt19937_64& rng, int n, int nonzero = 6) {
    CliffordElement<GaussRational> a(n);
    std::uniform_int_distribution<std::uint32_t> blade(0, static_cast<std::uint32_t>(a.blade_count() - 1));
    for (int i = 0; i < nonzero; ++i) a.at(blade(rng)) += random_gauss(rng);
    return a;
}

/// Random element of the grade-j spinor space.
inline CliffordElement<GaussRational> random_spinor(std::mt19937_64& rng, int n, int j) {
    CliffordElement<GaussRational> a(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == j) a += clifford::spinor_basis<GaussRational>(n, mask) * random_gauss(rng);
    return a;
}

/// Spinor-weighted hmono waves over several rational tuples, all of grade j and p+q <= max_degree.
inline hermitian::HermPoly<GaussRational> random_hmonogenic(std::mt19937_64& rng, int n, int j, int max_degree,
                                                            int waves = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::uint64_t> seed;
    hermitian::HermPoly<GaussRational> f(n);
    for (int w = 0; w < waves; ++w) {
        const int k = deg(rng);
        std::uniform_int_distribution<int> split(0, k);
        const int p = split(rng);
        const auto tu = rational_stiefel(n, seed(rng));
        f += hermitian::hmono_wave(tu, p, k - p).times(random_spinor(rng, n, j));
    }
    return f;
}

}  // namespace unitary_radon::sampling
