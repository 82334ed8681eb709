#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace unitary_radon {

inline Rational factorial(int k) {
    if (k < 0) throw DomainError("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

inline Rational binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

/// Rising factorial (a)_k = a(a+1)...(a+k-1).
inline Rational pochhammer(const Rational& a, int k) {
    if (k < 0) throw DomainError("pochhammer with negative length");
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

inline Rational pow2(int e) {
    mpz_class r(1);
    r <<= static_cast<unsigned long>(e);
    return Rational(r);
}

/// Product of factorials of the parts of a multi-index.
inline Rational multi_factorial(const std::vector<int>& a) {
    Rational r(1);
    for (int v : a) r *= factorial(v);
    return r;
}

namespace detail {
inline void check_pqn(int p, int q, int n) {
    if (p < 0 || q < 0) throw DomainError("negative bi-degree");
    if (n < 2) throw DimensionError("dimension n must be at least 2");
}
}  // namespace detail

/// Squared sphere norm of the plane wave of bi-degree (p,q).
inline Rational gamma_pq(int p, int q, int n) {
    detail::check_pqn(p, q, n);
    return pow2(p + q) * factorial(p) * factorial(q) / pochhammer(Rational(n), p + q);
}

/// Dimension of the space of complex spherical harmonics of bi-degree (p,q).
inline Rational dim_H(int p, int q, int n) {
    detail::check_pqn(p, q, n);
    Rational r = Rational(n + p + q - 1) / (n - 1) * binomial(q + n - 2, n - 2) *
                 binomial(p + n - 2, n - 2);
    return r;
}

inline Rational lambda_pq(int p, int q, int n) {
    detail::check_pqn(p, q, n);
    const int k = p + q;
    const int nu = std::min(p, q);
    return factorial(k + n - 1) / (pow2(k) * factorial(n - 1) * factorial(k - nu));
}

inline Rational lambda_tilde_pq(int p, int q, int n) {
    detail::check_pqn(p, q, n);
    const int k = p + q;
    const int nu = std::min(p, q);
    return Rational((p + 1) * (p + 1) * (q + 1) * (q + 1)) * factorial(k + n + 1) /
           (pow2(k + 2) * factorial(n - 1) * factorial(k - nu));
}

/// Floating-point evaluations through log-gamma, kept independent of the exact path.
namespace floating {

inline double gamma_pq(int p, int q, int n) {
    return std::exp((p + q) * std::log(2.0) + std::lgamma(p + 1.0) + std::lgamma(q + 1.0) -
                    std::lgamma(n + p + q + 0.0) + std::lgamma(n + 0.0));
}

inline double dim_H(int p, int q, int n) {
    auto lbin = [](double a, double b) {
        return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1);
    };
    return (n + p + q - 1.0) / (n - 1.0) *
           std::exp(lbin(q + n - 2.0, n - 2.0) + lbin(p + n - 2.0, n - 2.0));
}

inline double lambda_pq(int p, int q, int n) {
    const int k = p + q;
    const int nu = std::min(p, q);
    return std::exp(std::lgamma(k + n + 0.0) - k * std::log(2.0) - std::lgamma(n + 0.0) -
                    std::lgamma(k - nu + 1.0));
}

}  // namespace floating

}  // namespace unitary_radon
