#pragma once

#include "bipoly.hpp"
#include "clifford.hpp"
#include "errors.hpp"
#include "fit.hpp"
#include "geometry.hpp"
#include "realspace.hpp"
#include "verify.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

/// JSON documents for polynomials, Hermite expansions, tuples and reports.
///
/// Scalars are either JSON numbers (floating) or {"num": "...", "den": "..."} rationals (exact).
/// Integers count as exact. Duplicate monomials or indices are summed.
namespace unitary_radon::io {

using json = nlohmann::json;

class SchemaError : public std::invalid_argument {
public:
    SchemaError(const std::string& path, const std::string& what)
        : std::invalid_argument("schema violation at " + path + ": " + what) {}
};

/// SHA-256 of a byte string, lower-case hex.
inline std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

// ---------------------------------------------------------------------------------------------
// Scalars

inline bool is_exact_scalar(const json& v) {
    return (v.is_object() && v.contains("num")) || v.is_number_integer() || v.is_number_unsigned();
}

inline Rational parse_rational(const json& v, const std::string& path) {
    if (v.is_number_integer() || v.is_number_unsigned()) return Rational(v.dump());
    if (!v.is_object() || !v.contains("num")) throw SchemaError(path, "expected a rational {num, den}");
    auto text = [&](const char* key) -> std::string {
        if (!v.contains(key)) return "1";
        const auto& x = v.at(key);
        if (x.is_string()) return x.get<std::string>();
        if (x.is_number_integer() || x.is_number_unsigned()) return x.dump();
        throw SchemaError(path + "." + key, "expected an integer or integer string");
    };
    try {
        Rational r(text("num") + "/" + text("den"));
        if (r.get_den() == 0) throw SchemaError(path, "zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw SchemaError(path, "malformed rational");
    }
}

inline double parse_double(const json& v, const std::string& path) {
    if (v.is_object() && v.contains("num")) return parse_rational(v, path).get_d();
    if (!v.is_number()) throw SchemaError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw SchemaError(path, "non-finite number");
    return d;
}

inline json rational_json(const Rational& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

template <class S>
S parse_scalar(const json& obj, const std::string& path) {
    const json zero = 0;
    const json& re = obj.contains("re") ? obj.at("re") : zero;
    const json& im = obj.contains("im") ? obj.at("im") : zero;
    if constexpr (is_exact_v<S>) {
        return {parse_rational(re, path + ".re"), parse_rational(im, path + ".im")};
    } else {
        return {parse_double(re, path + ".re"), parse_double(im, path + ".im")};
    }
}

inline void put_scalar(json& obj, const Complex& c) {
    obj["re"] = c.real();
    obj["im"] = c.imag();
}
inline void put_scalar(json& obj, const GaussRational& c) {
    obj["re"] = rational_json(c.re());
    obj["im"] = rational_json(c.im());
}

// ---------------------------------------------------------------------------------------------
// Documents

inline int parse_n(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer())
        throw SchemaError("$.n", "expected an integer dimension");
    const int n = doc.at("n").get<int>();
    if (n < 1) throw SchemaError("$.n", "dimension must be positive");
    return n;
}

inline MultiIndex parse_index(const json& v, int n, const std::string& path) {
    if (!v.is_array() || static_cast<int>(v.size()) != n) throw SchemaError(path, "expected " + std::to_string(n) + " exponents");
    MultiIndex out(n);
    for (int j = 0; j < n; ++j) {
        if (!v[j].is_number_integer() || v[j].get<int>() < 0) throw SchemaError(path, "exponents must be non-negative integers");
        out[j] = v[j].get<int>();
    }
    return out;
}

/// True when every coefficient of a polynomial or expansion document is exact.
inline bool document_is_exact(const json& doc) {
    const char* key = doc.contains("terms") ? "terms" : "coeffs";
    if (!doc.contains(key)) return true;
    for (const auto& t : doc.at(key)) {
        if (t.contains("blades")) {
            for (const auto& b : t.at("blades"))
                if ((b.contains("re") && !is_exact_scalar(b.at("re"))) || (b.contains("im") && !is_exact_scalar(b.at("im"))))
                    return false;
            continue;
        }
        if ((t.contains("re") && !is_exact_scalar(t.at("re"))) || (t.contains("im") && !is_exact_scalar(t.at("im"))))
            return false;
    }
    return true;
}

template <class S>
CliffordElement<S> parse_clifford(const json& v, int n, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of blades");
    CliffordElement<S> c(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto p = path + "[" + std::to_string(i) + "]";
        if (!v[i].contains("mask") || !v[i].at("mask").is_number_integer()) throw SchemaError(p + ".mask", "expected an integer");
        const long mask = v[i].at("mask").get<long>();
        if (mask < 0 || static_cast<std::size_t>(mask) >= c.blade_count()) throw SchemaError(p + ".mask", "blade out of range");
        c.at(static_cast<std::uint32_t>(mask)) += parse_scalar<S>(v[i], p);
    }
    return c;
}

template <class S>
json clifford_json(const CliffordElement<S>& c) {
    json blades = json::array();
    for (std::uint32_t m = 0; m < c.blade_count(); ++m) {
        if (is_zero(c[m])) continue;
        json b = {{"mask", m}};
        put_scalar(b, c[m]);
        blades.push_back(std::move(b));
    }
    return blades;
}

/// Polynomial document; coefficient type C is a scalar or a Clifford element ("blades" per term).
template <class C>
BiPoly<C> parse_polynomial(const json& doc) {
    const int n = parse_n(doc);
    if (!doc.contains("terms") || !doc.at("terms").is_array()) throw SchemaError("$.terms", "expected an array");
    BiPoly<C> p(n);
    const auto& terms = doc.at("terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto path = "$.terms[" + std::to_string(i) + "]";
        const auto& t = terms[i];
        if (!t.is_object()) throw SchemaError(path, "expected an object");
        if (!t.contains("alpha") || !t.contains("beta")) throw SchemaError(path, "missing alpha or beta");
        const Monomial m(parse_index(t.at("alpha"), n, path + ".alpha"), parse_index(t.at("beta"), n, path + ".beta"));
        if constexpr (std::is_same_v<C, Complex> || std::is_same_v<C, GaussRational>) {
            p.add_term(m, parse_scalar<C>(t, path));
        } else {
            using S = coefficient_scalar_t<C>;
            if (!t.contains("blades")) throw SchemaError(path, "Clifford coefficients need blades");
            p.add_term(m, parse_clifford<S>(t.at("blades"), n, path + ".blades"));
        }
    }
    return p;
}

template <class C>
json polynomial_json(const BiPoly<C>& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t = {{"alpha", m.alpha()}, {"beta", m.beta()}};
        if constexpr (std::is_same_v<C, Complex> || std::is_same_v<C, GaussRational>)
            put_scalar(t, c);
        else
            t["blades"] = clifford_json(c);
        terms.push_back(std::move(t));
    }
    return {{"n", p.n()}, {"terms", std::move(terms)}};
}

template <class S>
realspace::HermiteExpansion<S> parse_expansion(const json& doc) {
    const int n = parse_n(doc);
    if (!doc.contains("coeffs") || !doc.at("coeffs").is_array()) throw SchemaError("$.coeffs", "expected an array");
    realspace::HermiteExpansion<S> e(n);
    const auto& coeffs = doc.at("coeffs");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto path = "$.coeffs[" + std::to_string(i) + "]";
        if (!coeffs[i].contains("index")) throw SchemaError(path, "missing index");
        e.add(parse_index(coeffs[i].at("index"), n, path + ".index"), parse_scalar<S>(coeffs[i], path));
    }
    return e;
}

template <class S>
json expansion_json(const realspace::HermiteExpansion<S>& e) {
    json coeffs = json::array();
    for (const auto& [a, c] : e.coeffs()) {
        json t = {{"index", a}};
        put_scalar(t, c);
        coeffs.push_back(std::move(t));
    }
    return {{"n", e.n()}, {"coeffs", std::move(coeffs)}};
}

/// Sampled L2 function {"n", "grid":[{"x":[...], "re", "im"}]}, input to the approximate fitter.
inline std::vector<realspace::GridSample> parse_grid(const json& doc) {
    const int n = parse_n(doc);
    if (!doc.contains("grid") || !doc.at("grid").is_array()) throw SchemaError("$.grid", "expected an array");
    std::vector<realspace::GridSample> out;
    const auto& grid = doc.at("grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto path = "$.grid[" + std::to_string(i) + "]";
        const auto& g = grid[i];
        if (!g.contains("x") || !g.at("x").is_array() || static_cast<int>(g.at("x").size()) != n)
            throw SchemaError(path + ".x", "expected " + std::to_string(n) + " coordinates");
        realspace::GridSample s;
        for (int j = 0; j < n; ++j) s.x.push_back(parse_double(g.at("x")[j], path + ".x"));
        s.value = parse_scalar<Complex>(g, path);
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Tuples

/// A tuple description resolved to exact or floating vectors.
using AnyTuple = std::variant<StiefelTuple<GaussRational>, StiefelTuple<Complex>>;

template <class S>
json vector_json(const ComplexVec<S>& v) {
    json out = json::array();
    for (const auto& x : v) {
        if constexpr (is_exact_v<S>)
            out.push_back({rational_json(x.re()), rational_json(x.im())});
        else
            out.push_back({x.real(), x.imag()});
    }
    return out;
}

inline json tuple_json(const AnyTuple& t) {
    return std::visit([](const auto& tu) { return json{{"t", vector_json(tu.t())}, {"s", vector_json(tu.s())}}; }, t);
}

/// {"axis":[i,j]} (0-based), {"haar_seed":k}, {"rational_seed":k}, or explicit {"t":[[re,im],...],"s":[...]}.
inline AnyTuple parse_tuple(const json& doc, int n) {
    if (!doc.is_object()) throw SchemaError("$tuple", "expected an object");
    if (doc.contains("axis")) {
        const auto& a = doc.at("axis");
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw SchemaError("$tuple.axis", "expected two integer indices");
        return axis_tuple<GaussRational>(n, a[0].get<int>(), a[1].get<int>());
    }
    if (doc.contains("haar_seed")) return sample_stiefel(n, doc.at("haar_seed").get<std::uint64_t>());
    if (doc.contains("rational_seed")) return rational_stiefel(n, doc.at("rational_seed").get<std::uint64_t>());
    if (!doc.contains("t") || !doc.contains("s")) throw SchemaError("$tuple", "expected axis, haar_seed, rational_seed or t/s");
    bool exact = true;
    for (const char* key : {"t", "s"})
        for (const auto& pair : doc.at(key))
            for (const auto& x : pair) exact = exact && is_exact_scalar(x);
    auto read = [&](const char* key, auto tag) {
        using S = decltype(tag);
        const auto& arr = doc.at(key);
        if (!arr.is_array() || static_cast<int>(arr.size()) != n)
            throw SchemaError(std::string("$tuple.") + key, "expected " + std::to_string(n) + " entries");
        ComplexVec<S> v(n);
        for (int j = 0; j < n; ++j) {
            const auto path = std::string("$tuple.") + key + "[" + std::to_string(j) + "]";
            if (!arr[j].is_array() || arr[j].size() != 2) throw SchemaError(path, "expected [re, im]");
            v[j] = parse_scalar<S>(json{{"re", arr[j][0]}, {"im", arr[j][1]}}, path);
        }
        return v;
    };
    if (exact) return StiefelTuple<GaussRational>(read("t", GaussRational{}), read("s", GaussRational{}));
    return StiefelTuple<Complex>(read("t", Complex{}), read("s", Complex{}));
}

/// Command-line shorthand: "axis:i,j", "haar:K", "rational:K", or inline JSON.
inline AnyTuple parse_tuple_spec(const std::string& spec, int n) {
    auto after = [&](const std::string& prefix) { return spec.substr(prefix.size()); };
    if (spec.rfind("axis:", 0) == 0) {
        const auto rest = after("axis:");
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw SchemaError("--tuple", "expected axis:i,j");
        return parse_tuple(json{{"axis", {std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1))}}}, n);
    }
    if (spec.rfind("haar:", 0) == 0) return parse_tuple(json{{"haar_seed", std::stoull(after("haar:"))}}, n);
    if (spec.rfind("rational:", 0) == 0) return parse_tuple(json{{"rational_seed", std::stoull(after("rational:"))}}, n);
    try {
        return parse_tuple(json::parse(spec), n);
    } catch (const json::parse_error&) {
        throw SchemaError("--tuple", "unrecognized tuple spec '" + spec + "'");
    }
}

// ---------------------------------------------------------------------------------------------
// Reports

inline json check_json(const verify::Check& c) {
    json j = {{"name", c.name}, {"passed", c.passed}, {"gate", c.gate}, {"measured", c.measured},
              {"tolerance", c.tolerance}, {"detail", c.detail}};
    return j;
}

}  // namespace unitary_radon::io
