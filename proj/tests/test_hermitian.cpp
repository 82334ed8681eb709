#include "random_hermitian.hpp"

#include <gtest/gtest.h>

using namespace unitary_radon;
using namespace unitary_radon::hermitian;
using namespace test_support;
using Q = GaussRational;

TEST(Dirac, Examples) {
    for (int n = 1; n <= 4; ++n) {
        const auto beta = clifford::spin_euler<Q>(n);
        EXPECT_EQ(dirac_z(vector_variable<Q>(n)), HPoly::constant(n, beta));
        HPoly zbar_only = HPoly::monomial(MultiIndex(n, 0), MultiIndex(n, 2), beta);
        EXPECT_TRUE(dirac_z(zbar_only).is_zero());
    }
}

TEST(NullTau, AxisExample) {
    const int n = 2;
    const auto f1 = clifford::witt<Q>(n, 1, false), f2 = clifford::witt<Q>(n, 2, false);
    const auto f1d = clifford::witt<Q>(n, 1, true), f2d = clifford::witt<Q>(n, 2, true);
    EXPECT_EQ(null_tau(axis_tuple<Q>(2, 0, 1)), f1 * f1d + f1 * f2d - f2 * f1d - f2 * f2d);
}

TEST(NullTau, NilpotentAndCubicRelation) {
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto tau = null_tau(rational_stiefel(n, seed));
            EXPECT_TRUE((tau * tau).is_zero());
            EXPECT_EQ(tau * dagger(tau) * tau, tau * Q(4));
        }
}

TEST(NullTau, ProjectorAnnihilatesBoundaryGrades) {
    for (int n = 2; n <= 4; ++n) {
        const auto tau = null_tau(rational_stiefel(n, 9));
        const auto ttd = tau * dagger(tau);
        EXPECT_TRUE((ttd * clifford::spinor_basis<Q>(n, 0)).is_zero());
        EXPECT_TRUE((ttd * clifford::spinor_basis<Q>(n, (1u << n) - 1)).is_zero());
        EXPECT_FALSE((ttd * clifford::spinor_basis<Q>(n, 1)).is_zero() &&
                     (ttd * clifford::spinor_basis<Q>(n, 2)).is_zero());
    }
}

TEST(HmonoWave, IsHermitianMonogenicAndHarmonic) {
    for (int n = 2; n <= 3; ++n) {
        const auto tu = rational_stiefel(n, 20 + n);
        EXPECT_EQ(hmono_wave(tu, 0, 0), HPoly::constant(n, null_tau(tu)));
        for (int p = 0; p <= 5; ++p)
            for (int q = 0; p + q <= 5; ++q) {
                const auto w = hmono_wave(tu, p, q);
                EXPECT_TRUE(dirac_z(w).is_zero());
                EXPECT_TRUE(dirac_zdag(w).is_zero());
                EXPECT_TRUE(laplace_z(w).is_zero());
            }
    }
}

TEST(HermInner, NormTable) {
    for (int n = 2; n <= 4; ++n) {
        const auto tu = rational_stiefel(n, 30 + n);
        const auto tau = null_tau(tu);
        const int top = n == 4 ? 2 : 3;
        for (int p = 0; p <= top; ++p)
            for (int q = 0; q <= top; ++q)
                for (int u = 0; u <= top; ++u)
                    for (int v = 0; v <= top; ++v) {
                        const auto g = herm_inner(hmono_wave(tu, p, q), hmono_wave(tu, u, v));
                        if (p == u && q == v)
                            EXPECT_EQ(g, dagger(tau) * tau * Q(gamma_pq(p, q, n)));
                        else
                            EXPECT_TRUE(g.is_zero()) << p << q << u << v;
                    }
    }
}

TEST(HermRadon, ReproducesSpinorWeightedWaves) {
    std::mt19937_64 rng(1);
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j < n; ++j) {
            const auto tu = rational_stiefel(n, 40 + j);
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; p + q <= 3; ++q) {
                    const auto f = hmono_wave(tu, p, q).times(random_spinor(rng, n, j));
                    const auto r = herm_radon(f, tu);
                    EXPECT_EQ(r.reconstructed, f);
                    if (!f.is_zero()) {
                        EXPECT_EQ(r.coefficients.size(), 1u);
                    }
                }
        }
}

TEST(HermRadon, BoundaryGradesProjectToZero) {
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 3; ++n) {
        const auto tu = rational_stiefel(n, 5);
        for (int j : {0, n}) {
            const auto f = random_hmonogenic(rng, n, j, 3);
            EXPECT_TRUE(herm_radon(f, tu).reconstructed.is_zero());
        }
    }
}

TEST(HermRadon, ProjectionLaws) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2;
        const int j = 1 + trial % (n - 1);
        const auto tu = rational_stiefel(n, 100 + trial);
        const auto f = random_hmonogenic(rng, n, j, 3), g = random_hmonogenic(rng, n, j, 3);
        const auto pf = herm_radon(f, tu).reconstructed;
        EXPECT_EQ(herm_radon(pf, tu).reconstructed, pf);
        EXPECT_EQ(herm_inner(pf, g), herm_inner(f, herm_radon(g, tu).reconstructed));
    }
}

TEST(HermRadon, RejectsNonMonogenicInput) {
    const int n = 2;
    const auto f = HPoly::monomial({1, 0}, {0, 0}, clifford::spinor_basis<Q>(n, 0));
    try {
        herm_radon(f, axis_tuple<Q>(n, 0, 1));
        FAIL() << "expected ContractViolation";
    } catch (const ContractViolation& e) {
        EXPECT_GT(e.residual(), 0.0);
        EXPECT_NE(std::string(e.what()).find("dirac_z"), std::string::npos);
    }
}

TEST(HermRadon, FloatMatchesExact) {
    std::mt19937_64 rng(4);
    const auto tu = rational_stiefel(3, 7);
    const auto f = random_hmonogenic(rng, 3, 1, 3);
    const auto exact = herm_radon(f, tu).reconstructed;
    const auto fl = herm_radon(convert<CliffordElement<Complex>>(f, [](const Cl& c) { return to_complex(c); }),
                               to_complex(tu))
                        .reconstructed;
    for (const auto& [m, c] : exact.terms()) EXPECT_LT(magnitude(to_complex(c) - fl.coefficient(m)), 1e-10);
}

TEST(HermKernel, ScalarFactorIsQuarterSzegoKernel) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 3; ++n) {
        const auto tu = rational_stiefel(n, 60);
        const auto ttd = null_tau(tu) * dagger(null_tau(tu));
        ComplexVec<Q> u(n);
        for (auto& x : u) x = random_gauss(rng) * Q(Rational(1) / 8);
        const auto scalar_kernel = ball::kernel_polynomial(tu, u, 5);
        EXPECT_EQ(herm_kernel_polynomial(tu, u, 5), lift(scalar_kernel, ttd * Q(Rational(1) / 4)));
        const auto params = ball::KernelParams{to_complex(tu), 40, 40};
        const auto z = random_point(rng, n, 0.3), w = random_point(rng, n, 0.3);
        EXPECT_LT(magnitude(herm_kernel_series(params, z, w) - herm_kernel_closed(params, z, w)), 1e-10);
        EXPECT_LT(magnitude(dagger(herm_kernel_closed(params, z, w)) - herm_kernel_closed(params, w, z)), 1e-12);
    }
}

TEST(HermDual, Examples) {
    EXPECT_EQ(herm_dual_constant(0, 0, 1, 2), Rational(1) / 2);
    const int n = 2;
    const auto tu = rational_stiefel(n, 3);
    const auto f = hmono_wave(tu, 0, 0).times(clifford::spinor_basis<Q>(n, 1));
    EXPECT_EQ(herm_dual_exact(f, n), f.scaled(Rational(1) / 2));
}

TEST(HermDual, OperatorFormMatchesSubstitution) {
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 3; ++n)
        for (int j = 0; j <= n; ++j) {
            const auto f = random_hmonogenic(rng, n, j, 3);
            EXPECT_EQ(herm_dual_operator(f, n), herm_dual_exact(f, n));
        }
}

TEST(HermDual, RejectsMixedGrades) {
    std::mt19937_64 rng(7);
    const auto f = random_hmonogenic(rng, 3, 1, 2) + random_hmonogenic(rng, 3, 2, 2);
    EXPECT_THROW(herm_dual_exact(f, 3), ContractViolation);
    HPoly sum(3);
    for (const auto& [j, part] : grade_split(f)) sum += herm_dual_exact(part, 3);
    EXPECT_EQ(sum, herm_dual_operator(f, 3));
}

TEST(HermDual, MonteCarloMatchesPrintedConstantAtDegreeZero) {
    const int n = 2;
    const auto tu = to_complex(rational_stiefel(n, 3));
    const auto alpha = clifford::spinor_basis<Complex>(n, 1) + clifford::spinor_basis<Complex>(n, 2) * Complex(0.5, 1);
    const auto f = hmono_wave(tu, 0, 0).times(alpha);
    const auto mc = herm_dual_monte_carlo(f, n, 100000, 7);
    const auto exact = herm_dual_exact(f, n);
    for (const auto& [m, c] : exact.terms())
        for (std::uint32_t b = 0; b < c.blade_count(); ++b)
            EXPECT_LE(std::abs(mc.mean.coefficient(m)[b] - c[b]), 3 * mc.standard_error.at(m)[b] + 1e-15);
}

TEST(HermDual, MonteCarloExceedsPrintedConstantAtPositiveDegree) {
    // Measured ratio to the nominal constant is nu!(p+1)(q+1).
    const int n = 2;
    const auto tu = to_complex(rational_stiefel(n, 3));
    const auto alpha = clifford::spinor_basis<Complex>(n, 1);
    for (auto [p, q] : {std::pair{1, 0}, std::pair{1, 1}}) {
        const auto f = hmono_wave(tu, p, q).times(alpha);
        const auto mc = herm_dual_monte_carlo(f, n, 40000, 11);
        const auto exact = herm_dual_exact(f, n);
        const double expected = (p + 1) * (q + 1) * factorial(std::min(p, q)).get_d();
        int compared = 0;
        for (const auto& [m, c] : exact.terms())
            for (std::uint32_t b = 0; b < c.blade_count(); ++b) {
                if (std::abs(c[b]) < 1e-3) continue;
                const Complex got = mc.mean.coefficient(m)[b];
                EXPECT_LE(std::abs(got - expected * c[b]), 4 * mc.standard_error.at(m)[b]);
                EXPECT_GT(std::abs(got - c[b]), 4 * mc.standard_error.at(m)[b]);
                ++compared;
            }
        EXPECT_GT(compared, 0);
    }
}

TEST(HermInvert, OperatorFactorsAgainstTable) {
    for (int n = 2; n <= 4; ++n)
        for (int j = 1; j < n; ++j)
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= 3; ++q) {
                    const auto lit = inversion_factors_literal(p, q, j, n);
                    const auto tab = inversion_factors_table(p, q, j, n);
                    EXPECT_EQ(lit.j1, tab.j1);
                    EXPECT_EQ(lit.j2, tab.j2);
                    EXPECT_EQ(lit.j3, tab.j3);
                    EXPECT_EQ(lit.j4 * (q + n - j), tab.j4 * (n - j));
                }
}

TEST(HermInvert, OperatorMatchesEigenvalues) {
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j < n; ++j) {
            const auto f = random_hmonogenic(rng, n, j, 3);
            for (Branch b : {Branch::p_ge_q, Branch::p_lt_q}) {
                HPoly expected(n), part(n);
                for (const auto& [d, piece] : bidegree_split(f)) {
                    if (!in_branch(d, b)) continue;
                    part += piece;
                    expected += piece.scaled(inversion_eigenvalue(d.p, d.q, j, n, b));
                }
                EXPECT_EQ(inversion_operator(part, n, j, b), expected);
            }
        }
}

TEST(HermInvert, RejectsBoundaryGrades) {
    EXPECT_THROW(herm_invert(HPoly(2), 2, 0), DomainError);
    EXPECT_THROW(herm_invert(HPoly(2), 2, 2), DomainError);
    EXPECT_THROW(inversion_eigenvalue(0, 0, 3, 3, Branch::p_ge_q), DomainError);
}

TEST(HermInvert, SecondBranchRoundTripIsExact) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 2;
        const int j = 1 + trial % (n - 1);
        const auto f = random_hmonogenic(rng, n, j, 3);
        HPoly second(n);
        for (const auto& [d, piece] : bidegree_split(f))
            if (in_branch(d, Branch::p_lt_q)) second += piece;
        EXPECT_EQ(herm_invert(herm_dual_exact(f, n, Branch::p_lt_q), n, j, Branch::p_lt_q), second);
    }
}

TEST(HermInvert, FirstBranchRoundTripIsOffByEulerFactor) {
    // The first-branch operator overshoots by (q+n)(q+n+1) on bi-degree (p, q).
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j < n; ++j)
            for (int p = 0; p <= 3; ++p)
                for (int q = 0; q <= p; ++q)
                    EXPECT_EQ(herm_dual_constant(p, q, j, n) * inversion_eigenvalue(p, q, j, n, Branch::p_ge_q),
                              Rational((q + n) * (q + n + 1)));
}
