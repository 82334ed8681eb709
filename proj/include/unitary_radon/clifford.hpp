#pragma once

#include "bipoly.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "monte_carlo.hpp"
#include "scalar.hpp"

#include <bit>
#include <cstdint>
#include <ostream>
#include <vector>

namespace unitary_radon {

/// Element of the complex Clifford algebra on generators e_1..e_{2n} with e_i^2 = -1,
/// stored densely over the 4^n blades. Bit k of a blade mask stands for e_{k+1}.
///
/// A default-constructed element carries no algebra and acts as zero in sums and
/// comparisons, so it can serve as the additive identity of polynomial coefficients.
template <class S>
class CliffordElement {
public:
    using Mask = std::uint32_t;

    CliffordElement() = default;

    explicit CliffordElement(int n) : n_(n), c_(std::size_t{1} << (2 * n)) {
        if (n < 1 || n > 8) throw DimensionError("CliffordElement: half-dimension must lie in [1, 8]");
    }

    static CliffordElement scalar(int n, const S& s) {
        CliffordElement r(n);
        r.c_[0] = s;
        return r;
    }

    static CliffordElement blade(int n, Mask mask, const S& s = from_rational<S>(Rational(1))) {
        CliffordElement r(n);
        r.at(mask) = s;
        return r;
    }

    /// Generator e_i, 1-based.
    static CliffordElement generator(int n, int i) {
        if (i < 1 || i > 2 * n) throw DimensionError("CliffordElement: generator index out of range");
        return blade(n, Mask{1} << (i - 1));
    }

    int n() const { return n_; }
    bool has_algebra() const { return !c_.empty(); }
    std::size_t blade_count() const { return c_.size(); }

    const S& operator[](Mask m) const { return c_.at(m); }
    S& at(Mask m) { return c_.at(m); }

    /// Masks of the nonzero blades.
    std::vector<Mask> support() const {
        std::vector<Mask> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!unitary_radon::is_zero(c_[i])) out.push_back(static_cast<Mask>(i));
        return out;
    }

    S scalar_part() const { return c_.empty() ? S{} : c_[0]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!unitary_radon::is_zero(x)) return false;
        return true;
    }

    CliffordElement& operator+=(const CliffordElement& o) {
        if (!o.has_algebra()) return *this;
        if (!has_algebra()) return *this = o;
        check_same(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    CliffordElement& operator-=(const CliffordElement& o) { return *this += -o; }

    friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
    friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
    friend CliffordElement operator-(CliffordElement a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend CliffordElement operator*(CliffordElement a, const S& s) {
        for (auto& x : a.c_) x *= s;
        return a;
    }
    friend CliffordElement operator*(const S& s, CliffordElement a) { return a * s; }

    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        if (!a.has_algebra()) return a;
        if (!b.has_algebra()) return b;
        a.check_same(b);
        CliffordElement r(a.n_);
        const std::vector<Mask> left = a.support(), right = b.support();
        for (Mask i : left)
            for (Mask j : right) {
                const S prod = a.c_[i] * b.c_[j];
                if (blade_sign(i, j) > 0)
                    r.c_[i ^ j] += prod;
                else
                    r.c_[i ^ j] -= prod;
            }
        return r;
    }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        if (!a.has_algebra() || !b.has_algebra()) return a.is_zero() && b.is_zero();
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// Sign of e_A e_B = sign * e_{A xor B}: transpositions to sort, then e_i^2 = -1 per shared generator.
    static int blade_sign(Mask a, Mask b) {
        int swaps = 0;
        for (Mask x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
        swaps += std::popcount(a & b);
        return (swaps & 1) ? -1 : 1;
    }

    friend std::ostream& operator<<(std::ostream& os, const CliffordElement& x) {
        bool first = true;
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (unitary_radon::is_zero(x.c_[i])) continue;
            os << (first ? "" : " + ") << x.c_[i];
            for (int k = 0; k < 2 * x.n_; ++k)
                if (i >> k & 1) os << "e" << (k + 1);
            first = false;
        }
        if (first) os << "0";
        return os;
    }

private:
    void check_same(const CliffordElement& o) const {
        if (n_ != o.n_) throw DimensionError("CliffordElement: algebra mismatch");
    }

    int n_ = 0;
    std::vector<S> c_;
};

template <class S>
struct coefficient_scalar<CliffordElement<S>> {
    using type = S;
};

/// Conjugation with ebar_j = -e_j, reversing products.
template <class S>
CliffordElement<S> dagger(const CliffordElement<S>& a) {
    if (!a.has_algebra()) return a;
    CliffordElement<S> r(a.n());
    for (std::uint32_t m = 0; m < a.blade_count(); ++m) {
        if (is_zero(a[m])) continue;
        const int g = std::popcount(m);
        const S c = conj(a[m]);
        r.at(m) = ((g * (g + 1) / 2) % 2) ? -c : c;
    }
    return r;
}

template <class S>
CliffordElement<S> adjoint(const CliffordElement<S>& a) {
    return dagger(a);
}
template <class S>
S scalar_part(const CliffordElement<S>& a) {
    return a.scalar_part();
}
template <class S>
bool is_zero(const CliffordElement<S>& a) {
    return a.is_zero();
}
/// Largest blade coefficient magnitude.
template <class S>
double magnitude(const CliffordElement<S>& a) {
    double r = 0.0;
    for (std::uint32_t m = 0; m < a.blade_count(); ++m) r = std::max(r, magnitude(a[m]));
    return r;
}
template <class S>
CliffordElement<Complex> to_complex(const CliffordElement<S>& a) {
    if (!a.has_algebra()) return {};
    CliffordElement<Complex> r(a.n());
    for (std::uint32_t m = 0; m < a.blade_count(); ++m) r.at(m) = to_complex(a[m]);
    return r;
}

template <>
struct component_codec<CliffordElement<Complex>> {
    static std::vector<Complex> encode(const CliffordElement<Complex>& c) {
        std::vector<Complex> v(c.blade_count());
        for (std::uint32_t m = 0; m < v.size(); ++m) v[m] = c[m];
        return v;
    }
    static CliffordElement<Complex> decode(const std::vector<Complex>& v) {
        if (v.empty()) return {};
        const int n = std::countr_zero(v.size()) / 2;
        CliffordElement<Complex> r(n);
        for (std::uint32_t m = 0; m < v.size(); ++m) r.at(m) = v[m];
        return r;
    }
};

namespace clifford {

template <class S>
CliffordElement<S> one(int n) {
    return CliffordElement<S>::scalar(n, from_rational<S>(Rational(1)));
}

/// f_j = (e_j - i e_{n+j})/2 or f_j^dagger = -(e_j + i e_{n+j})/2, j 1-based.
template <class S>
CliffordElement<S> witt(int n, int j, bool daggered) {
    if (j < 1 || j > n) throw DimensionError("witt: index out of range");
    const S half = from_rational<S>(Rational(1) / 2);
    const S i_half = half * scalar_info<S>::imag_unit();
    const auto ej = CliffordElement<S>::generator(n, j);
    const auto enj = CliffordElement<S>::generator(n, n + j);
    return daggered ? -(ej * half + enj * i_half) : ej * half - enj * i_half;
}

/// beta = sum_j f_j^dagger f_j.
template <class S>
CliffordElement<S> spin_euler(int n) {
    CliffordElement<S> b(n);
    for (int j = 1; j <= n; ++j) b += witt<S>(n, j, true) * witt<S>(n, j, false);
    return b;
}

/// I = f_1 f_1^dagger ... f_n f_n^dagger.
template <class S>
CliffordElement<S> idempotent(int n) {
    auto r = one<S>(n);
    for (int j = 1; j <= n; ++j) r = r * witt<S>(n, j, false) * witt<S>(n, j, true);
    return r;
}

/// sum_j f_j v_j, or sum_j f_j^dagger conj(v_j).
template <class S>
CliffordElement<S> herm_vector(const ComplexVec<S>& v, bool daggered) {
    const int n = static_cast<int>(v.size());
    CliffordElement<S> r(n);
    for (int j = 1; j <= n; ++j) r += witt<S>(n, j, daggered) * (daggered ? conj(v[j - 1]) : v[j - 1]);
    return r;
}

/// f_{a_1}^dagger ... f_{a_k}^dagger I for the set bits of mask, a homogeneous spinor of grade popcount(mask).
template <class S>
CliffordElement<S> spinor_basis(int n, std::uint32_t mask) {
    auto r = one<S>(n);
    for (int j = 1; j <= n; ++j)
        if (mask >> (j - 1) & 1) r = r * witt<S>(n, j, true);
    return r * idempotent<S>(n);
}

/// Left multiplication by prod_{k != j} (beta - k)/(j - k): the grade-j part of a.
template <class S>
CliffordElement<S> grade_project(const CliffordElement<S>& a, int j) {
    if (!a.has_algebra()) return a;
    const int n = a.n();
    if (j < 0 || j > n) throw DimensionError("grade_project: grade out of range");
    const auto beta = spin_euler<S>(n);
    CliffordElement<S> r = a;
    for (int k = 0; k <= n; ++k) {
        if (k == j) continue;
        r = (beta * r - r * from_rational<S>(Rational(k))) * from_rational<S>(Rational(1) / (j - k));
    }
    return r;
}

/// Grades carrying a nonzero part of a.
template <class S>
std::vector<int> grades_present(const CliffordElement<S>& a, double tol = 0.0) {
    std::vector<int> out;
    if (!a.has_algebra()) return out;
    for (int j = 0; j <= a.n(); ++j) {
        const auto part = grade_project(a, j);
        if (is_exact_v<S> ? !part.is_zero() : magnitude(part) > tol) out.push_back(j);
    }
    return out;
}

}  // namespace clifford
}  // namespace unitary_radon
