#pragma once

#include "ball.hpp"
#include "combinatorics.hpp"
#include "fock.hpp"
#include "harmonic.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <vector>

namespace unitary_radon::realspace {

/// Coefficients of He_k(x) = (-1)^k e^{x^2/2} d^k/dx^k e^{-x^2/2}, lowest power first.
inline std::vector<Rational> hermite(int k) {
    if (k < 0) throw DomainError("hermite: negative degree");
    std::vector<Rational> prev{Rational(1)};
    if (k == 0) return prev;
    std::vector<Rational> cur{Rational(0), Rational(1)};
    for (int m = 1; m < k; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (int i = 0; i <= m; ++i) next[i + 1] += cur[i];
        for (int i = 0; i < m; ++i) next[i] -= m * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// He_k(x) by the three-term recurrence.
inline double hermite_value(int k, double x) {
    double prev = 1.0, cur = x;
    if (k == 0) return prev;
    for (int m = 1; m < k; ++m) {
        const double next = x * cur - m * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// f(x) = sum_alpha c_alpha psi_alpha(x), psi_alpha(x) = prod_j He_{alpha_j}(x_j) e^{-x_j^2/4}.
template <class S>
class HermiteExpansion {
public:
    explicit HermiteExpansion(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<MultiIndex, S>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const MultiIndex& alpha, const S& c) {
        if (static_cast<int>(alpha.size()) != n_) throw DimensionError("HermiteExpansion: index length mismatch");
        if (unitary_radon::is_zero(c)) return;
        auto [it, inserted] = coeffs_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (unitary_radon::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    S coefficient(const MultiIndex& alpha) const {
        auto it = coeffs_.find(alpha);
        return it == coeffs_.end() ? S{} : it->second;
    }

    HermiteExpansion& operator+=(const HermiteExpansion& o) {
        for (const auto& [a, c] : o.coeffs_) add(a, c);
        return *this;
    }
    HermiteExpansion& operator-=(const HermiteExpansion& o) {
        for (const auto& [a, c] : o.coeffs_) add(a, -c);
        return *this;
    }
    friend HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b) { return a += b; }
    friend HermiteExpansion operator-(HermiteExpansion a, const HermiteExpansion& b) { return a -= b; }

    HermiteExpansion times(const S& x) const {
        HermiteExpansion r(n_);
        for (const auto& [a, c] : coeffs_) r.add(a, c * x);
        return r;
    }

    friend bool operator==(const HermiteExpansion& a, const HermiteExpansion& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    std::map<MultiIndex, S> coeffs_;
};

template <class S>
S l2_inner(const HermiteExpansion<S>& f, const HermiteExpansion<S>& g) {
    if (f.n() != g.n()) throw DimensionError("l2_inner: dimension mismatch");
    S r{};
    for (const auto& [a, c] : f.coeffs()) {
        auto it = g.coeffs().find(a);
        if (it != g.coeffs().end()) r += conj(c) * it->second * from_rational<S>(multi_factorial(a));
    }
    return r;
}

/// Basis exchange psi_alpha -> z^alpha.
template <class S>
fock::FockElement<S> segal_bargmann(const HermiteExpansion<S>& f) {
    BiPoly<S> p(f.n());
    const MultiIndex zero(f.n(), 0);
    for (const auto& [a, c] : f.coeffs()) p.add_term(Monomial(a, zero), c);
    return fock::FockElement<S>(std::move(p));
}

template <class S>
HermiteExpansion<S> segal_bargmann_inv(const fock::FockElement<S>& f) {
    HermiteExpansion<S> r(f.n());
    for (const auto& [m, c] : f.poly().terms()) r.add(m.alpha(), c);
    return r;
}

/// psi^{(k)}_{t,s} by the multinomial expansion sum_{|kappa|=k} (k choose kappa) conj(s+t)^kappa psi_kappa.
template <class S>
HermiteExpansion<S> tuple_wave(const StiefelTuple<S>& tuple, int k) {
    const auto c = tuple.holo_direction();
    HermiteExpansion<S> r(tuple.n());
    for (const auto& kappa : multi_indices(tuple.n(), k)) {
        S w = from_rational<S>(factorial(k) / multi_factorial(kappa));
        for (int j = 0; j < tuple.n(); ++j) w *= ipow(c[j], kappa[j]);
        r.add(kappa, w);
    }
    return r;
}

/// The same wave obtained from the Fock side: inverse Segal-Bargmann of the plane wave.
template <class S>
HermiteExpansion<S> tuple_wave_via_fock(const StiefelTuple<S>& tuple, int k) {
    return segal_bargmann_inv(fock::entire_plane_wave(tuple, k));
}

inline Rational tuple_wave_norm(int k) { return pow2(k) * factorial(k); }

/// Orthogonal projection onto the tuple waves; coefficient keys are (k, 0).
template <class S>
Projection<S, HermiteExpansion<S>> l2_radon(const HermiteExpansion<S>& f, const StiefelTuple<S>& tuple,
                                            double tol = kDefaultTolerance) {
    if (f.n() != tuple.n()) throw DimensionError("l2_radon: dimension mismatch");
    std::map<int, bool> degrees;
    double scale = 0.0;
    for (const auto& [a, c] : f.coeffs()) {
        degrees[total_degree(a)] = true;
        scale = std::max(scale, magnitude(c));
    }
    Projection<S, HermiteExpansion<S>> out{{}, HermiteExpansion<S>(f.n())};
    for (const auto& [k, _] : degrees) {
        const auto wave = tuple_wave(tuple, k);
        const S c = l2_inner(wave, f) / from_rational<S>(tuple_wave_norm(k));
        if (unitary_radon::detail::negligible(c, scale, tol)) continue;
        out.coefficients.emplace(Bidegree{k, 0}, c);
        out.reconstructed += wave.times(c);
    }
    return out;
}

/// The commuting-square route: Segal-Bargmann, Fock projection, and back.
template <class S>
Projection<S, HermiteExpansion<S>> l2_radon_via_fock(const HermiteExpansion<S>& f, const StiefelTuple<S>& tuple,
                                                     double tol = kDefaultTolerance) {
    auto fock_side = fock::bargmann_radon(segal_bargmann(f), tuple, tol);
    return {std::move(fock_side.coefficients), segal_bargmann_inv(fock_side.reconstructed)};
}

template <class S>
HermiteExpansion<S> l2_dual_exact(const HermiteExpansion<S>& f, int n) {
    if (f.n() != n) throw DimensionError("l2_dual_exact: dimension mismatch");
    HermiteExpansion<S> r(n);
    for (const auto& [a, c] : f.coeffs()) r.add(a, c * from_rational<S>(fock::fock_dual_constant(total_degree(a), n)));
    return r;
}

/// (1/Gamma(n)) (E+1)...(E+n-1) with E diagonal on psi_alpha with eigenvalue |alpha|.
template <class S>
HermiteExpansion<S> l2_invert(const HermiteExpansion<S>& g, int n) {
    if (g.n() != n) throw DimensionError("l2_invert: dimension mismatch");
    HermiteExpansion<S> r(n);
    for (const auto& [a, c] : g.coeffs())
        r.add(a, c * from_rational<S>(pochhammer(total_degree(a) + 1, n - 1) / factorial(n - 1)));
    return r;
}

inline MonteCarloResult<Complex> l2_dual_monte_carlo(const HermiteExpansion<Complex>& f, int n, std::size_t samples,
                                              std::uint64_t seed, unsigned workers = 0) {
    return stiefel_average<Complex>(
        n, samples, seed,
        [&](const StiefelTuple<Complex>& tu) { return segal_bargmann(l2_radon(f, tu, 0.0).reconstructed).poly(); },
        workers);
}

// Symbolic polynomial-times-Gaussian calculus. A polynomial P(x) in real variables
// is stored as a holomorphic BiPoly with z standing for x; the Gaussian factor
// e^{-|x|^2/4} is implicit.

/// prod_j He_{alpha_j}(x_j) as a polynomial.
template <class S>
BiPoly<S> hermite_product(const MultiIndex& alpha) {
    const int n = static_cast<int>(alpha.size());
    const MultiIndex zero(n, 0);
    BiPoly<S> r = BiPoly<S>::constant(n, from_rational<S>(Rational(1)));
    for (int j = 0; j < n; ++j) {
        const auto h = hermite(alpha[j]);
        BiPoly<S> factor(n);
        for (std::size_t i = 0; i < h.size(); ++i) {
            MultiIndex a(n, 0);
            a[j] = static_cast<int>(i);
            factor.add_term(Monomial(a, zero), from_rational<S>(h[i]));
        }
        r = r * factor;
    }
    return r;
}

/// Polynomial part of psi^{(k)}_{t,s}.
template <class S>
BiPoly<S> polynomial_part(const HermiteExpansion<S>& f) {
    BiPoly<S> r(f.n());
    for (const auto& [a, c] : f.coeffs()) r += hermite_product<S>(a).times(c);
    return r;
}

/// Q with (c2 (-Delta) + c1 |x|^2 + c0)(P e^{-|x|^2/4}) = Q e^{-|x|^2/4}.
template <class S>
BiPoly<S> apply_oscillator(const BiPoly<S>& p, const Rational& c2, const Rational& c1, const Rational& c0) {
    const int n = p.n();
    BiPoly<S> lap(n);
    for (int j = 0; j < n; ++j) lap += dz(j, dz(j, p));
    BiPoly<S> x_sq(n);
    const MultiIndex zero(n, 0);
    for (int j = 0; j < n; ++j) {
        MultiIndex a(n, 0);
        a[j] = 2;
        x_sq.add_term(Monomial(a, zero), from_rational<S>(Rational(1)));
    }
    // -Delta(P g) = (-Delta P + x.grad P + (n/2) P - |x|^2 P / 4) g
    const BiPoly<S> neg_lap = (-lap + euler_z(p) + p.scaled(Rational(n) / 2) - (x_sq * p).scaled(Rational(1, 4)));
    return neg_lap.scaled(c2) + (x_sq * p).scaled(c1) + p.scaled(c0);
}

/// Oscillator whose eigenfunctions are the psi_alpha: -Delta + |x|^2/4 - n/2, eigenvalue |alpha|.
template <class S>
BiPoly<S> number_operator(const BiPoly<S>& p) {
    return apply_oscillator(p, Rational(1), Rational(1, 4), -Rational(p.n()) / 2);
}

/// The operator (-Delta + |x|^2 - n)/2, a second normalization of the oscillator.
template <class S>
BiPoly<S> nominal_oscillator(const BiPoly<S>& p) {
    return apply_oscillator(p, Rational(1, 2), Rational(1, 2), -Rational(p.n()) / 2);
}

/// Pointwise value of psi^{(k)}_{t,s}(x) via H_{k+1} = xi H_k - k sigma H_{k-1},
/// xi = c.x, sigma = c.c, c = conj(s+t).
inline std::vector<Complex> tuple_wave_values(const StiefelTuple<Complex>& tuple, const std::vector<double>& x,
                                              int k_max) {
    const auto c = tuple.holo_direction();
    Complex xi = 0.0, sigma = 0.0;
    double r2 = 0.0;
    for (int j = 0; j < tuple.n(); ++j) {
        xi += c[j] * x[j];
        sigma += c[j] * c[j];
        r2 += x[j] * x[j];
    }
    const double gauss = std::exp(-r2 / 4);
    std::vector<Complex> out(k_max + 1);
    Complex prev = 1.0, cur = xi;
    out[0] = gauss;
    for (int k = 1; k <= k_max; ++k) {
        out[k] = cur * gauss;
        const Complex next = xi * cur - double(k) * sigma * prev;
        prev = cur;
        cur = next;
    }
    return out;
}

namespace detail {

// psi^{(k)}(x) / sqrt(2^k k!) without the Gaussian; stays bounded for large k.
inline std::vector<Complex> normalized_wave_values(const Complex& xi, const Complex& sigma, int k_max) {
    std::vector<Complex> h(k_max + 1);
    h[0] = 1.0;
    if (k_max >= 1) h[1] = xi / std::sqrt(2.0);
    for (int k = 1; k < k_max; ++k)
        h[k + 1] = xi * h[k] / std::sqrt(2.0 * (k + 1)) - sigma * h[k - 1] * std::sqrt(double(k) / (k + 1)) / 2.0;
    return h;
}

}  // namespace detail

/// Truncated series sum_{k<=K} psi^{(k)}(x) conj(psi^{(k)}(y)) / (2^k k!).
inline Complex l2_kernel_series(const StiefelTuple<Complex>& tuple, const std::vector<double>& x,
                                const std::vector<double>& y, int k_max) {
    if (static_cast<int>(x.size()) != tuple.n() || static_cast<int>(y.size()) != tuple.n())
        throw DimensionError("l2_kernel_series: point dimension mismatch");
    const auto c = tuple.holo_direction();
    Complex xi = 0.0, eta = 0.0, sigma = 0.0;
    double r2 = 0.0;
    for (int j = 0; j < tuple.n(); ++j) {
        xi += c[j] * x[j];
        eta += c[j] * y[j];
        sigma += c[j] * c[j];
        r2 += x[j] * x[j] + y[j] * y[j];
    }
    const auto hx = detail::normalized_wave_values(xi, sigma, k_max);
    const auto hy = detail::normalized_wave_values(eta, sigma, k_max);
    Complex sum = 0.0;
    for (int k = 0; k <= k_max; ++k) sum += hx[k] * std::conj(hy[k]);
    return sum * std::exp(-r2 / 4);
}

/// Closed form of the series through Mehler's formula with rho = |c.c|/2.
inline Complex l2_kernel_closed(const StiefelTuple<Complex>& tuple, const std::vector<double>& x,
                                const std::vector<double>& y) {
    const auto c = tuple.holo_direction();
    Complex xi = 0.0, eta = 0.0, sigma = 0.0;
    double r2 = 0.0;
    for (int j = 0; j < tuple.n(); ++j) {
        xi += c[j] * x[j];
        eta += c[j] * y[j];
        sigma += c[j] * c[j];
        r2 += x[j] * x[j] + y[j] * y[j];
    }
    const double rho = std::abs(sigma) / 2;
    if (std::abs(rho - 1.0) < 1e-8) throw SingularError("l2_kernel_closed: degenerate tuple, kernel is a delta");
    const Complex expo =
        (xi * std::conj(eta) - (std::conj(sigma) * xi * xi + sigma * std::conj(eta) * std::conj(eta)) / 4.0) /
        (2.0 * (1.0 - rho * rho));
    return std::exp(expo - r2 / 4) / std::sqrt(1.0 - rho * rho);
}

/// Product form of the kernel, rho_j = |(t+s)_j|^2.
inline double l2_kernel_nominal(const StiefelTuple<Complex>& tuple, const std::vector<double>& x,
                                const std::vector<double>& y) {
    double r = 1.0;
    for (int j = 0; j < tuple.n(); ++j) {
        const double rho = std::norm(tuple.t()[j] + tuple.s()[j]);
        if (std::abs(rho - 1.0) < 1e-8)
            throw SingularError("l2_kernel_nominal: rho_j = 1, kernel is a delta; use the coefficient projection");
        if (rho > 1.0) throw DomainError("l2_kernel_nominal: rho_j > 1, product form undefined");
        const double num = (1 + rho * rho) * (x[j] * x[j] + y[j] * y[j]) - 4 * rho * x[j] * y[j];
        r *= std::exp(-num / (2 * (1 - rho * rho))) / std::sqrt(1 - rho * rho);
    }
    return r;
}

inline double mehler_series(double rho, double x, double y, int k_max) {
    double sum = 0.0, w = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) w *= rho / k;
        sum += w * hermite_value(k, x) * hermite_value(k, y);
    }
    return sum;
}

inline double mehler_closed(double rho, double x, double y) {
    return std::exp((2 * rho * x * y - rho * rho * (x * x + y * y)) / (2 * (1 - rho * rho))) /
           std::sqrt(1 - rho * rho);
}

}  // namespace unitary_radon::realspace
