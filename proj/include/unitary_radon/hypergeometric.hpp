#pragma once

#include "errors.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <cmath>

namespace unitary_radon {

/// Truncated series value with the magnitude of its outermost shell.
struct SeriesValue {
    Complex value;
    double last_shell = 0.0;
    bool in_domain = true;
};

namespace detail {
inline bool is_nonpositive_integer(const Rational& r) { return r.get_den() == 1 && sgn(r) <= 0; }
}  // namespace detail

/// True when (z, w) lies in the convergence domain of H3:
/// |z| < r, |w| < s for some r + (s - 1/2)^2 = 1/4.
inline bool horn_h3_domain(Complex z, Complex w) {
    const double az = std::abs(z), aw = std::abs(w);
    if (aw >= 1.0) return false;
    const double bound = aw < 0.5 ? 0.25 : aw * (1.0 - aw);
    return az < bound;
}

/// Horn H3(alpha, beta, gamma; z, w) = sum (alpha)_{2m+n} (beta)_n z^m w^n / ((gamma)_{m+n} m! n!),
/// summed over 0 <= m, n <= max_terms.
inline SeriesValue horn_h3(const Rational& alpha, const Rational& beta, const Rational& gamma, Complex z,
                           Complex w, int max_terms = 60) {
    if (detail::is_nonpositive_integer(gamma)) throw SingularError("horn_h3: gamma is a pole");
    const double a = alpha.get_d(), b = beta.get_d(), g = gamma.get_d();
    SeriesValue out;
    out.in_domain = horn_h3_domain(z, w);
    Complex row_start = 1.0;  // coefficient(m, 0) * z^m
    for (int m = 0; m <= max_terms; ++m) {
        if (m > 0) row_start *= z * ((a + 2 * m - 2) * (a + 2 * m - 1) / ((g + m - 1) * m));
        Complex term = row_start;
        for (int n = 0; n <= max_terms; ++n) {
            if (n > 0) term *= w * ((a + 2 * m + n - 1) * (b + n - 1) / ((g + m + n - 1) * n));
            out.value += term;
            if (m == max_terms || n == max_terms) out.last_shell = std::max(out.last_shell, std::abs(term));
        }
    }
    return out;
}

/// Gauss series 2F1(a, b; c; x) truncated after max_terms terms.
inline SeriesValue hyp2f1(const Rational& a, const Rational& b, const Rational& c, Complex x, int max_terms = 200) {
    if (std::abs(x) >= 1.0) throw DomainError("hyp2f1: |x| must be below 1");
    if (detail::is_nonpositive_integer(c)) throw SingularError("hyp2f1: c is a pole");
    const double da = a.get_d(), db = b.get_d(), dc = c.get_d();
    SeriesValue out;
    Complex term = 1.0;
    for (int k = 0; k <= max_terms; ++k) {
        if (k > 0) term *= x * ((da + k - 1) * (db + k - 1) / ((dc + k - 1) * k));
        out.value += term;
    }
    out.last_shell = std::abs(term);
    return out;
}

}  // namespace unitary_radon
