#include "random_inputs.hpp"

#include <unitary_radon/realspace.hpp>

#include <gtest/gtest.h>

using namespace unitary_radon;
using namespace unitary_radon::realspace;
using namespace test_support;
using Q = GaussRational;
using Expansion = HermiteExpansion<Q>;

namespace {

Expansion psi(MultiIndex a, Q c = Q(1)) {
    Expansion e(static_cast<int>(a.size()));
    e.add(a, c);
    return e;
}

std::vector<double> random_real(std::mt19937_64& rng, int n, double box) {
    std::uniform_real_distribution<double> u(-box, box);
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    return x;
}

/// He_k by repeated symbolic differentiation of the Gaussian: He_{k+1} = x He_k - He_k'.
std::vector<Rational> hermite_by_rodrigues(int k) {
    std::vector<Rational> p{Rational(1)};
    for (int m = 0; m < k; ++m) {
        std::vector<Rational> next(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] += p[i];
        for (std::size_t i = 1; i < p.size(); ++i) next[i - 1] -= p[i] * static_cast<long>(i);
        p = std::move(next);
    }
    return p;
}

}  // namespace

TEST(Hermite, Examples) {
    EXPECT_EQ(hermite(0), (std::vector<Rational>{1}));
    EXPECT_EQ(hermite(1), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(hermite(2), (std::vector<Rational>{-1, 0, 1}));
    for (int k = 0; k <= 12; ++k) EXPECT_EQ(hermite(k), hermite_by_rodrigues(k));
    EXPECT_DOUBLE_EQ(hermite_value(3, 2.0), 8.0 - 6.0);
}

TEST(L2Inner, Examples) {
    EXPECT_EQ(l2_inner(psi({0}), psi({0})), Q(1));
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(l2_inner(psi({k}), psi({k})), Q(factorial(k)));
    EXPECT_EQ(l2_inner(psi({1}), psi({2})), Q(0));
}

TEST(SegalBargmann, BasisExchange) {
    EXPECT_EQ(segal_bargmann(psi({0})).poly(), BiPoly<Q>::constant(1, Q(1)));
    EXPECT_EQ(segal_bargmann(psi({2})).poly(), BiPoly<Q>::monomial({2}, {0}, Q(1)));
    EXPECT_EQ(segal_bargmann_inv(segal_bargmann(psi({2}))), psi({2}));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_expansion(rng, 3, 5), g = random_expansion(rng, 3, 5);
        EXPECT_EQ(l2_inner(f, g), fock::fock_inner(segal_bargmann(f), segal_bargmann(g)));
        EXPECT_EQ(segal_bargmann_inv(segal_bargmann(f)), f);
    }
}

TEST(TupleWave, Examples) {
    auto ax = axis_tuple<Q>(2, 0, 1);
    EXPECT_EQ(tuple_wave(ax, 0), psi({0, 0}));
    EXPECT_EQ(tuple_wave(ax, 1), psi({1, 0}) + psi({0, 1}));
    for (int k = 0; k <= 6; ++k) {
        auto w = tuple_wave(ax, k);
        for (int j = 0; j <= k; ++j) EXPECT_EQ(w.coefficient({j, k - j}), Q(binomial(k, j)));
    }
}

TEST(TupleWave, TwoConstructionsAgreeAndAreOrthogonal) {
    for (int n = 2; n <= 3; ++n) {
        auto tu = rational_stiefel(n, 9 + n);
        for (int k = 0; k <= 6; ++k) {
            EXPECT_EQ(tuple_wave(tu, k), tuple_wave_via_fock(tu, k));
            for (int l = 0; l <= 6; ++l)
                EXPECT_EQ(l2_inner(tuple_wave(tu, k), tuple_wave(tu, l)), k == l ? Q(tuple_wave_norm(k)) : Q(0));
        }
        auto tf = sample_stiefel(n, n);
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= 6; ++l) {
                const double expect = k == l ? tuple_wave_norm(k).get_d() : 0.0;
                EXPECT_LT(std::abs(l2_inner(tuple_wave(tf, k), tuple_wave(tf, l)) - expect),
                          1e-12 * std::max(1.0, expect));
            }
    }
}

TEST(L2Radon, Examples) {
    auto tu = rational_stiefel(3, 4);
    for (int k = 0; k <= 4; ++k) {
        auto r = l2_radon(tuple_wave(tu, k), tu);
        ASSERT_EQ(r.coefficients.size(), 1u);
        EXPECT_EQ(r.coefficients.at({k, 0}), Q(1));
    }
    auto ax = axis_tuple<Q>(2, 0, 1);
    EXPECT_TRUE(l2_radon(psi({1, 0}) - psi({0, 1}), ax).coefficients.empty());
}

TEST(L2Radon, ProjectionLawsAndCommutingSquare) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 2;
        auto tu = rational_stiefel(n, trial + 3);
        auto f = random_expansion(rng, n, 5), g = random_expansion(rng, n, 5);
        auto pf = l2_radon(f, tu);
        EXPECT_EQ(l2_radon(pf.reconstructed, tu).reconstructed, pf.reconstructed);
        EXPECT_EQ(l2_inner(pf.reconstructed, g), l2_inner(f, l2_radon(g, tu).reconstructed));
        auto via = l2_radon_via_fock(f, tu);
        EXPECT_EQ(via.coefficients, pf.coefficients);
        EXPECT_EQ(via.reconstructed, pf.reconstructed);
        EXPECT_EQ(segal_bargmann(pf.reconstructed), fock::bargmann_radon(segal_bargmann(f), tu).reconstructed);
    }
}

TEST(L2Radon, AxisTupleAnnihilatesOtherCoordinates) {
    auto ax = axis_tuple<Q>(4, 0, 1);
    for (int a3 = 1; a3 <= 4; ++a3)
        for (int a4 = 0; a4 <= 2; ++a4) EXPECT_TRUE(l2_radon(psi({0, 0, a3, a4}), ax).coefficients.empty());
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(l2_radon(tuple_wave(ax, k), ax).reconstructed, tuple_wave(ax, k));
}

TEST(L2Invert, DiagonalScaling) {
    EXPECT_EQ(l2_invert(psi({0, 0}), 2), psi({0, 0}));
    EXPECT_EQ(l2_invert(psi({2, 1, 0}), 3), psi({2, 1, 0}, Q(Rational(4 * 5) / 2)));
}

TEST(L2Invert, RoundTrip) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 2;
        auto f = random_expansion(rng, n, 5);
        EXPECT_EQ(l2_invert(l2_dual_exact(f, n), n), f);
    }
}

TEST(L2Invert, DualMonteCarlo) {
    HermiteExpansion<Complex> f(2);
    f.add({1, 1}, 1.0);
    f.add({1, 0}, Complex(0.0, 2.0));
    auto mc = l2_dual_monte_carlo(f, 2, 100000, 21);
    const auto exact = l2_dual_exact(f, 2);
    for (const auto& [a, c] : exact.coeffs()) {
        const Monomial m(a, MultiIndex(2, 0));
        EXPECT_LT(std::abs(mc.mean.coefficient(m) - c), 3 * mc.standard_error.at(m)[0]);
    }
}

TEST(Oscillator, HermiteFunctionsAreEigenfunctionsOfNumberOperator) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 4; ++k)
            for (const auto& a : multi_indices(n, k)) {
                const auto p = hermite_product<Q>(a);
                EXPECT_EQ(number_operator(p), p.scaled(k));
            }
}

TEST(Oscillator, WrittenNormalizationIsNotDiagonalOnPsi) {
    // (-Delta + |x|^2 - n)/2 has eigenfunctions He_k(x) e^{-x^2/2}-type, not e^{-x^2/4}.
    const auto p = hermite_product<Q>({1, 0});
    EXPECT_NE(nominal_oscillator(p), p);
    const auto ground = hermite_product<Q>({0});
    EXPECT_FALSE(nominal_oscillator(ground).is_zero());
}

TEST(L2Kernel, SeriesBasics) {
    auto ax = axis_tuple(2, 0, 1);
    std::vector<double> x{0.3, -0.7}, y{1.1, 0.2};
    EXPECT_NEAR(std::abs(l2_kernel_series(ax, x, y, 0) - std::exp(-(0.09 + 0.49 + 1.21 + 0.04) / 4)), 0.0, 1e-15);
    // Brute force at the origin: psi^{(k)}(0) from the Hermite expansion.
    Complex brute = 0.0;
    std::vector<double> zero{0.0, 0.0};
    auto axq = axis_tuple<Q>(2, 0, 1);
    for (int k = 0; k <= 10; ++k) {
        Complex v = 0.0;
        const auto wave = tuple_wave(axq, k);
        for (const auto& [a, c] : wave.coeffs())
            v += to_complex(c) * hermite_value(a[0], 0.0) * hermite_value(a[1], 0.0);
        brute += v * std::conj(v) / (tuple_wave_norm(k).get_d());
    }
    EXPECT_LT(std::abs(l2_kernel_series(ax, zero, zero, 10) - brute), 1e-12);
}

TEST(L2Kernel, RecurrenceMatchesExpansion) {
    std::mt19937_64 rng(7);
    auto tq = rational_stiefel(3, 1);
    auto tf = to_complex(tq);
    for (int i = 0; i < 10; ++i) {
        auto x = random_real(rng, 3, 2.0);
        auto vals = tuple_wave_values(tf, x, 8);
        for (int k = 0; k <= 8; ++k) {
            Complex v = 0.0;
            const auto wave = tuple_wave(tq, k);
            for (const auto& [a, c] : wave.coeffs()) {
                double h = 1.0;
                for (int j = 0; j < 3; ++j) h *= hermite_value(a[j], x[j]);
                v += to_complex(c) * h;
            }
            v *= std::exp(-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 4);
            EXPECT_LT(std::abs(vals[k] - v), 1e-10 * std::max(1.0, std::abs(v)));
        }
    }
}

TEST(L2Kernel, HermitianAndClosedForm) {
    // Cancellation in the series grows like 1/(1 - rho^2); keep rho away from the delta limit.
    std::mt19937_64 rng(8);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 6; ++seed) {
        const int n = 2 + static_cast<int>(seed % 2);
        auto tu = sample_stiefel(n, seed);
        Complex sigma = 0.0;
        for (const auto& v : tu.holo_direction()) sigma += v * v;
        if (std::abs(sigma) / 2 > 0.9) continue;
        ++checked;
        for (int i = 0; i < 20; ++i) {
            auto x = random_real(rng, n, 2.0), y = random_real(rng, n, 2.0);
            const Complex kxy = l2_kernel_series(tu, x, y, 600);
            EXPECT_LT(std::abs(kxy - std::conj(l2_kernel_series(tu, y, x, 600))), 1e-12);
            EXPECT_LT(std::abs(kxy - l2_kernel_closed(tu, x, y)), 1e-8 * std::abs(kxy) + 1e-9) << "rho " << std::abs(sigma) / 2;
        }
    }
}

TEST(L2Kernel, PrintedProductFormDisagreesWithSeries) {
    std::mt19937_64 rng(9);
    std::uint64_t seed = 0;
    auto in_nominal_domain = [](const StiefelTuple<Complex>& t) {
        for (int j = 0; j < t.n(); ++j)
            if (std::norm(t.t()[j] + t.s()[j]) >= 1.0) return false;
        return true;
    };
    auto tu = sample_stiefel(3, seed);
    while (!in_nominal_domain(tu)) tu = sample_stiefel(3, ++seed);
    int mismatches = 0;
    for (int i = 0; i < 20; ++i) {
        auto x = random_real(rng, 3, 1.5), y = random_real(rng, 3, 1.5);
        if (rel_err(l2_kernel_nominal(tu, x, y), l2_kernel_series(tu, x, y, 600)) > 1e-3) ++mismatches;
    }
    EXPECT_GT(mismatches, 15);
    std::vector<double> x{0.1, 0.2, 0.3};
    EXPECT_THROW(l2_kernel_nominal(axis_tuple(3, 0, 1), x, x), SingularError);
    EXPECT_THROW(l2_kernel_closed(axis_tuple(3, 0, 1), x, x), SingularError);
    EXPECT_THROW(l2_kernel_nominal(sample_stiefel(3, 5), x, x), DomainError);
}

TEST(Mehler, OneDimensionalOracle) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double x = u(rng), y = u(rng);
        const double closed = mehler_closed(0.5, x, y);
        EXPECT_LT(std::abs(mehler_series(0.5, x, y, 60) - closed) / std::abs(closed), 1e-8);
    }
}
