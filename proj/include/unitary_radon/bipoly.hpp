#pragma once

#include "combinatorics.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace unitary_radon {

/// Exponent pair (alpha, beta) of z^alpha zbar^beta, stored contiguously.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : e_(2 * n, 0) {}
    Monomial(const MultiIndex& alpha, const MultiIndex& beta) : e_(alpha) {
        if (alpha.size() != beta.size()) throw DimensionError("monomial: alpha/beta length mismatch");
        e_.insert(e_.end(), beta.begin(), beta.end());
    }

    int n() const { return static_cast<int>(e_.size() / 2); }
    int& alpha(int j) { return e_[j]; }
    int& beta(int j) { return e_[n() + j]; }
    int alpha(int j) const { return e_[j]; }
    int beta(int j) const { return e_[n() + j]; }
    MultiIndex alpha() const { return {e_.begin(), e_.begin() + n()}; }
    MultiIndex beta() const { return {e_.begin() + n(), e_.end()}; }

    int p() const {
        int r = 0;
        for (int j = 0; j < n(); ++j) r += e_[j];
        return r;
    }
    int q() const {
        int r = 0;
        for (int j = n(); j < 2 * n(); ++j) r += e_[j];
        return r;
    }

    /// alpha and beta swapped: the monomial of the complex conjugate.
    Monomial swapped() const {
        Monomial m(n());
        for (int j = 0; j < n(); ++j) {
            m.alpha(j) = beta(j);
            m.beta(j) = alpha(j);
        }
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m(a);
        for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
        return m;
    }

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
        os << "z^(";
        for (int j = 0; j < m.n(); ++j) os << (j ? "," : "") << m.alpha(j);
        os << ") zbar^(";
        for (int j = 0; j < m.n(); ++j) os << (j ? "," : "") << m.beta(j);
        return os << ')';
    }

private:
    std::vector<int> e_;
};

struct Bidegree {
    int p = 0;
    int q = 0;
    auto operator<=>(const Bidegree&) const = default;
    bool operator==(const Bidegree&) const = default;
};

/// Scalar field a coefficient ring is an algebra over. Clifford elements specialize this.
template <class C>
struct coefficient_scalar {
    using type = C;
};
template <class C>
using coefficient_scalar_t = typename coefficient_scalar<C>::type;

inline Complex adjoint(const Complex& x) { return std::conj(x); }
inline GaussRational adjoint(const GaussRational& x) { return conj(x); }
inline Complex scalar_part(const Complex& x) { return x; }
inline GaussRational scalar_part(const GaussRational& x) { return x; }

template <class C>
C scale(const C& c, const Rational& r) {
    return c * from_rational<coefficient_scalar_t<C>>(r);
}

namespace detail {
// Unqualified so coefficient rings declared later are found by argument-dependent lookup.
template <class C>
bool coefficient_is_zero(const C& c) {
    return is_zero(c);
}
}  // namespace detail

/// Sparse polynomial in commuting formal variables z_1..z_n, zbar_1..zbar_n.
template <class C>
class BiPoly {
public:
    using Terms = std::map<Monomial, C>;

    BiPoly() = default;
    explicit BiPoly(int n) : n_(n) {}

    static BiPoly constant(int n, const C& c) {
        BiPoly r(n);
        r.add_term(Monomial(n), c);
        return r;
    }

    static BiPoly monomial(const MultiIndex& alpha, const MultiIndex& beta, const C& c) {
        BiPoly r(static_cast<int>(alpha.size()));
        r.add_term(Monomial(alpha, beta), c);
        return r;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a monomial, or a default-constructed zero.
    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (m.n() != n_) throw DimensionError("BiPoly: monomial dimension mismatch");
        if (detail::coefficient_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) {
        BiPoly r(a.n_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        a.check_same(b);
        BiPoly r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    /// Right multiplication of every coefficient.
    template <class T>
    BiPoly times(const T& x) const {
        BiPoly r(n_);
        for (const auto& [m, c] : terms_) r.add_term(m, c * x);
        return r;
    }

    /// Left multiplication of every coefficient.
    template <class T>
    BiPoly left_times(const T& x) const {
        BiPoly r(n_);
        for (const auto& [m, c] : terms_) r.add_term(m, x * c);
        return r;
    }

    BiPoly scaled(const Rational& r) const { return times(from_rational<coefficient_scalar_t<C>>(r)); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [m, c] : p.terms_) {
            os << (first ? "" : " + ") << c << '*' << m;
            first = false;
        }
        return os;
    }

private:
    void check_same(const BiPoly& o) const {
        if (o.n_ != n_) throw DimensionError("BiPoly: dimension mismatch");
    }

    int n_ = 0;
    Terms terms_;
};

template <class C>
BiPoly<C> pow(const BiPoly<C>& p, int k, const C& one) {
    BiPoly<C> r = BiPoly<C>::constant(p.n(), one);
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

/// Sum v_j z_j, or sum v_j zbar_j when bar is set.
template <class S>
BiPoly<S> linear_form(const ComplexVec<S>& v, bool bar) {
    const int n = static_cast<int>(v.size());
    BiPoly<S> r(n);
    for (int j = 0; j < n; ++j) {
        Monomial m(n);
        (bar ? m.beta(j) : m.alpha(j)) = 1;
        r.add_term(m, v[j]);
    }
    return r;
}

/// |z|^2 = sum z_j zbar_j.
template <class C>
BiPoly<C> radial(int n, const C& one) {
    BiPoly<C> r(n);
    for (int j = 0; j < n; ++j) {
        Monomial m(n);
        m.alpha(j) = 1;
        m.beta(j) = 1;
        r.add_term(m, one);
    }
    return r;
}

template <class C>
BiPoly<C> map_terms(const BiPoly<C>& p, const std::function<void(Monomial&, C&)>& f) {
    BiPoly<C> r(p.n());
    for (auto [m, c] : p.terms()) {
        f(m, c);
        r.add_term(m, c);
    }
    return r;
}

template <class To, class From, class F>
BiPoly<To> convert(const BiPoly<From>& p, F&& f) {
    BiPoly<To> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
    return r;
}

namespace detail {
inline void check_var(int j, int n) {
    if (j < 0 || j >= n) throw DimensionError("variable index out of range");
}
}  // namespace detail

template <class C>
BiPoly<C> dz(int j, const BiPoly<C>& p) {
    detail::check_var(j, p.n());
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) {
        if (m.alpha(j) == 0) continue;
        Monomial d(m);
        --d.alpha(j);
        r.add_term(d, scale(c, Rational(m.alpha(j))));
    }
    return r;
}

template <class C>
BiPoly<C> dzbar(int j, const BiPoly<C>& p) {
    detail::check_var(j, p.n());
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) {
        if (m.beta(j) == 0) continue;
        Monomial d(m);
        --d.beta(j);
        r.add_term(d, scale(c, Rational(m.beta(j))));
    }
    return r;
}

template <class C>
BiPoly<C> euler_z(const BiPoly<C>& p) {
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m, scale(c, Rational(m.p())));
    return r;
}

template <class C>
BiPoly<C> euler_zbar(const BiPoly<C>& p) {
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m, scale(c, Rational(m.q())));
    return r;
}

/// Applies (E_z + a) when z_side, else (E_zbar + a).
template <class C>
BiPoly<C> euler_shift(const BiPoly<C>& p, bool z_side, const Rational& a) {
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m, scale(c, Rational((z_side ? m.p() : m.q())) + a));
    return r;
}

template <class C>
BiPoly<C> laplace_z(const BiPoly<C>& p) {
    BiPoly<C> r(p.n());
    for (int j = 0; j < p.n(); ++j) r += dzbar(j, dz(j, p));
    return r;
}

/// Multiplication by |z|^2 without constructing the product polynomial.
template <class C>
BiPoly<C> times_radial(const BiPoly<C>& p) {
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) {
        for (int j = 0; j < p.n(); ++j) {
            Monomial d(m);
            ++d.alpha(j);
            ++d.beta(j);
            r.add_term(d, c);
        }
    }
    return r;
}

/// Complex conjugate: swaps alpha and beta, takes the adjoint of coefficients.
template <class C>
BiPoly<C> adjoint(const BiPoly<C>& p) {
    BiPoly<C> r(p.n());
    for (const auto& [m, c] : p.terms()) r.add_term(m.swapped(), adjoint(c));
    return r;
}

template <class C>
std::map<Bidegree, BiPoly<C>> bidegree_split(const BiPoly<C>& p) {
    std::map<Bidegree, BiPoly<C>> out;
    for (const auto& [m, c] : p.terms()) {
        auto [it, _] = out.try_emplace(Bidegree{m.p(), m.q()}, p.n());
        it->second.add_term(m, c);
    }
    return out;
}

template <class C>
std::optional<Bidegree> bidegree_of(const BiPoly<C>& p) {
    std::optional<Bidegree> d;
    for (const auto& [m, c] : p.terms()) {
        const Bidegree b{m.p(), m.q()};
        if (d && *d != b) return std::nullopt;
        d = b;
    }
    if (!d) d = Bidegree{0, 0};
    return d;
}

template <class C>
int total_degree(const BiPoly<C>& p) {
    int k = 0;
    for (const auto& [m, c] : p.terms()) k = std::max(k, m.p() + m.q());
    return k;
}

template <class C>
bool is_holomorphic(const BiPoly<C>& p) {
    for (const auto& [m, c] : p.terms())
        if (m.q() != 0) return false;
    return true;
}

/// Largest coefficient magnitude; zero for the zero polynomial.
template <class C>
double max_abs(const BiPoly<C>& p) {
    double r = 0.0;
    for (const auto& [m, c] : p.terms()) r = std::max(r, magnitude(c));
    return r;
}

template <class C, class S>
C evaluate(const BiPoly<C>& p, const ComplexVec<S>& z) {
    if (static_cast<int>(z.size()) != p.n()) throw DimensionError("evaluate: point dimension mismatch");
    C r{};
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        S w = from_rational<S>(Rational(1));
        for (int j = 0; j < p.n(); ++j) {
            w *= ipow(z[j], m.alpha(j));
            w *= ipow(conj(z[j]), m.beta(j));
        }
        if (first) {
            r = c * w;
            first = false;
        } else {
            r += c * w;
        }
    }
    return r;
}

/// Evaluates with z and zbar replaced by independent vectors z and w.
template <class C, class S>
C evaluate_independent(const BiPoly<C>& p, const ComplexVec<S>& z, const ComplexVec<S>& w) {
    if (static_cast<int>(z.size()) != p.n() || static_cast<int>(w.size()) != p.n())
        throw DimensionError("evaluate: point dimension mismatch");
    C r{};
    for (const auto& [m, c] : p.terms()) {
        S v = from_rational<S>(Rational(1));
        for (int j = 0; j < p.n(); ++j) v *= ipow(z[j], m.alpha(j)) * ipow(w[j], m.beta(j));
        r += c * v;
    }
    return r;
}

/// Fischer inner product via the closed monomial form.
template <class S>
S fischer(const BiPoly<S>& p, const BiPoly<S>& q) {
    if (p.n() != q.n()) throw DimensionError("fischer: dimension mismatch");
    S r{};
    const auto& small = p.size() <= q.size() ? p : q;
    const auto& large = p.size() <= q.size() ? q : p;
    for (const auto& [m, c] : small.terms()) {
        auto it = large.terms().find(m);
        if (it == large.terms().end()) continue;
        const S& cp = (&small == &p) ? c : it->second;
        const S& cq = (&small == &p) ? it->second : c;
        const Rational w = multi_factorial(m.alpha()) * multi_factorial(m.beta());
        r += conj(cp) * cq * from_rational<S>(w);
    }
    return r;
}

/// Normalized sphere integral of z^a zbar^a: a! (n-1)! / (n-1+|a|)!.
inline Rational sphere_moment(const MultiIndex& a) {
    const int n = static_cast<int>(a.size());
    return multi_factorial(a) * factorial(n - 1) / factorial(n - 1 + total_degree(a));
}

/// Normalized spherical L2 pairing of adjoint(p) and q, coefficient ring valued.
template <class C>
C sphere_inner(const BiPoly<C>& p, const BiPoly<C>& q) {
    if (p.n() != q.n()) throw DimensionError("sphere_inner: dimension mismatch");
    const int n = p.n();
    C r{};
    bool first = true;
    MultiIndex zexp(n), zbexp(n);
    for (const auto& [ma, ca] : p.terms()) {
        for (const auto& [mb, cb] : q.terms()) {
            if (ma.p() + mb.q() != ma.q() + mb.p()) continue;
            bool match = true;
            for (int j = 0; j < n && match; ++j) {
                zexp[j] = ma.beta(j) + mb.alpha(j);
                zbexp[j] = ma.alpha(j) + mb.beta(j);
                match = zexp[j] == zbexp[j];
            }
            if (!match) continue;
            C term = scale(adjoint(ca) * cb, sphere_moment(zexp));
            if (first) {
                r = std::move(term);
                first = false;
            } else {
                r += term;
            }
        }
    }
    return r;
}

}  // namespace unitary_radon
