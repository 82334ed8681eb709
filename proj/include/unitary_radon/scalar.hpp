#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

namespace unitary_radon {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}  // NOLINT: implicit by design
    GaussRational(const Rational& re) : re_(re) {}  // NOLINT
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational d = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / d;
        Rational i = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& x) {
        return os << '(' << x.re_ << ", " << x.im_ << ')';
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline const GaussRational kImagUnit{Rational(0), Rational(1)};

// Uniform scalar vocabulary shared by every template in the library.

inline Complex conj(const Complex& x) { return std::conj(x); }
inline GaussRational conj(const GaussRational& x) { return {x.re(), -x.im()}; }

inline bool is_zero(const Complex& x) { return x == Complex{}; }
inline bool is_zero(const GaussRational& x) { return sgn(x.re()) == 0 && sgn(x.im()) == 0; }

inline double magnitude(const Complex& x) { return std::abs(x); }
inline double magnitude(const GaussRational& x) {
    return std::hypot(x.re().get_d(), x.im().get_d());
}

inline Complex to_complex(const Complex& x) { return x; }
inline Complex to_complex(const GaussRational& x) { return {x.re().get_d(), x.im().get_d()}; }

template <class S>
struct scalar_info;

template <>
struct scalar_info<Complex> {
    static constexpr bool exact = false;
    static Complex from_rational(const Rational& r) { return {r.get_d(), 0.0}; }
    static Complex imag_unit() { return {0.0, 1.0}; }
};

template <>
struct scalar_info<GaussRational> {
    static constexpr bool exact = true;
    static GaussRational from_rational(const Rational& r) { return GaussRational(r); }
    static GaussRational imag_unit() { return kImagUnit; }
};

template <class S>
S from_rational(const Rational& r) {
    return scalar_info<S>::from_rational(r);
}

template <class S>
inline constexpr bool is_exact_v = scalar_info<S>::exact;

/// Small integer power; exponent 0 gives one.
template <class S>
S ipow(const S& x, int e) {
    S r = from_rational<S>(Rational(1));
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace unitary_radon
