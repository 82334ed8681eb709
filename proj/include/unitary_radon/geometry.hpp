#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace unitary_radon {

template <class S>
using ComplexVec = std::vector<S>;

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
    int k = 0;
    for (int v : a) k += v;
    return k;
}

/// Hermitian inner product: sum of z_j conj(u_j).
template <class S>
S herm(const ComplexVec<S>& z, const ComplexVec<S>& u) {
    if (z.size() != u.size()) throw DimensionError("herm: length mismatch");
    S r{};
    for (std::size_t j = 0; j < z.size(); ++j) r += z[j] * conj(u[j]);
    return r;
}

/// Bilinear pairing without conjugation.
template <class S>
S bilinear_pair(const ComplexVec<S>& a, const ComplexVec<S>& b) {
    if (a.size() != b.size()) throw DimensionError("bilinear_pair: length mismatch");
    S r{};
    for (std::size_t j = 0; j < a.size(); ++j) r += a[j] * b[j];
    return r;
}

template <class S>
ComplexVec<S> conj(const ComplexVec<S>& v) {
    ComplexVec<S> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(conj(x));
    return r;
}

template <class S>
ComplexVec<S> operator+(const ComplexVec<S>& a, const ComplexVec<S>& b) {
    if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
    ComplexVec<S> r(a);
    for (std::size_t j = 0; j < a.size(); ++j) r[j] += b[j];
    return r;
}

template <class S>
ComplexVec<S> operator-(const ComplexVec<S>& a, const ComplexVec<S>& b) {
    if (a.size() != b.size()) throw DimensionError("vector sub: length mismatch");
    ComplexVec<S> r(a);
    for (std::size_t j = 0; j < a.size(); ++j) r[j] -= b[j];
    return r;
}

template <class S>
double norm2(const ComplexVec<S>& v) {
    double r = 0.0;
    for (const auto& x : v) r += std::norm(to_complex(x));
    return r;
}

inline constexpr double kTupleTolerance = 1e-10;

/// Hermitian-orthonormal pair (t, s) in C^n.
template <class S>
class StiefelTuple {
public:
    StiefelTuple(ComplexVec<S> t, ComplexVec<S> s) : t_(std::move(t)), s_(std::move(s)) {
        if (t_.size() != s_.size()) throw DimensionError("Stiefel tuple: length mismatch");
        if (t_.size() < 2) throw DimensionError("Stiefel tuple: n must be at least 2");
        const S one = from_rational<S>(Rational(1));
        const S tt = herm(t_, t_);
        const S ss = herm(s_, s_);
        const S ts = herm(t_, s_);
        if constexpr (is_exact_v<S>) {
            if (!(tt == one) || !(ss == one) || !is_zero(ts))
                throw InvalidTuple("Stiefel tuple is not Hermitian-orthonormal");
        } else {
            const double err = std::max({magnitude(tt - one), magnitude(ss - one), magnitude(ts)});
            if (err > kTupleTolerance)
                throw InvalidTuple("Stiefel tuple is not Hermitian-orthonormal (error " +
                                   std::to_string(err) + ")");
        }
    }

    const ComplexVec<S>& t() const { return t_; }
    const ComplexVec<S>& s() const { return s_; }
    int n() const { return static_cast<int>(t_.size()); }

    /// conj(s + t): holomorphic plane-wave direction.
    ComplexVec<S> holo_direction() const { return conj(s_ + t_); }
    /// s - t: antiholomorphic plane-wave direction.
    ComplexVec<S> anti_direction() const { return s_ - t_; }

private:
    ComplexVec<S> t_;
    ComplexVec<S> s_;
};

template <class S>
StiefelTuple<Complex> to_complex(const StiefelTuple<S>& tuple) {
    ComplexVec<Complex> t, s;
    for (const auto& x : tuple.t()) t.push_back(to_complex(x));
    for (const auto& x : tuple.s()) s.push_back(to_complex(x));
    return {t, s};
}

template <class S = Complex>
StiefelTuple<S> axis_tuple(int n, int i, int j) {
    if (n < 2) throw DimensionError("axis_tuple: n must be at least 2");
    if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidTuple("axis_tuple: index out of range");
    if (i == j) throw InvalidTuple("axis_tuple: indices must differ");
    ComplexVec<S> t(n), s(n);
    t[i] = from_rational<S>(Rational(1));
    s[j] = from_rational<S>(Rational(1));
    return {t, s};
}

/// SplitMix64 finalizer; derives independent per-sample seeds from (seed, index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// First two columns of a Haar unitary: Gaussian columns orthonormalized under herm.
inline StiefelTuple<Complex> sample_stiefel(int n, std::uint64_t seed) {
    if (n < 2) throw DimensionError("sample_stiefel: n must be at least 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto draw = [&] {
        ComplexVec<Complex> v(n);
        for (auto& x : v) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            x = {re, im};
        }
        return v;
    };
    ComplexVec<Complex> t = draw();
    ComplexVec<Complex> s = draw();
    const double tn = std::sqrt(norm2(t));
    for (auto& x : t) x /= tn;
    const Complex proj = herm(s, t);
    for (int j = 0; j < n; ++j) s[j] -= proj * t[j];
    const double sn = std::sqrt(norm2(s));
    for (auto& x : s) x /= sn;
    return {t, s};
}

/// Exact tuple with Gaussian-rational entries: the first two columns of the
/// Cayley transform (I - A)(I + A)^{-1} of a random skew-Hermitian integer matrix A.
inline StiefelTuple<GaussRational> rational_stiefel(int n, std::uint64_t seed, int spread = 2) {
    if (n < 2) throw DimensionError("rational_stiefel: n must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(-spread, spread);
    Matrix<GaussRational> b(n, std::vector<GaussRational>(n));
    for (auto& row : b)
        for (auto& x : row) x = GaussRational(Rational(coin(rng)), Rational(coin(rng)));
    Matrix<GaussRational> plus(n, std::vector<GaussRational>(n));
    Matrix<GaussRational> rhs(n, std::vector<GaussRational>(2));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const GaussRational a = b[r][c] - conj(b[c][r]);
            plus[r][c] = a + GaussRational(r == c ? 1 : 0);
            if (c < 2) rhs[r][c] = GaussRational(r == c ? 1 : 0) - a;
        }
    }
    const Matrix<GaussRational> cols = solve(plus, rhs);
    ComplexVec<GaussRational> t(n), s(n);
    for (int r = 0; r < n; ++r) {
        t[r] = cols[r][0];
        s[r] = cols[r][1];
    }
    return {t, s};
}

}  // namespace unitary_radon
