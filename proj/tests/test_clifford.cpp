#include "random_hermitian.hpp"

#include <gtest/gtest.h>

using namespace unitary_radon;
using namespace unitary_radon::clifford;
using namespace test_support;
using Q = GaussRational;

namespace {

Cl scalar(int n, Rational r) { return Cl::scalar(n, Q(r)); }

}  // namespace

TEST(Clifford, GeneratorExamples) {
    const auto e1 = Cl::generator(2, 1), e2 = Cl::generator(2, 2);
    EXPECT_EQ(e1 * e1, scalar(2, -1));
    EXPECT_TRUE((e1 * e2 + e2 * e1).is_zero());
    EXPECT_EQ(scalar_part(dagger(e1) * e1), Q(1));
    EXPECT_THROW(Cl::generator(2, 5), DimensionError);
    EXPECT_THROW(Cl(2) * Cl(3), DimensionError);
}

TEST(Clifford, DefaultElementIsUniversalZero) {
    Cl z;
    EXPECT_EQ(z, Cl(3));
    EXPECT_EQ(z + Cl::generator(3, 2), Cl::generator(3, 2));
    EXPECT_TRUE((z * Cl::generator(3, 2)).is_zero());
}

TEST(Clifford, GeneratorRelations) {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= 2 * n; ++i)
            for (int j = 1; j <= 2 * n; ++j) {
                const auto ei = Cl::generator(n, i), ej = Cl::generator(n, j);
                EXPECT_EQ(ei * ej + ej * ei, scalar(n, i == j ? -2 : 0));
            }
}

TEST(Clifford, ProductIsAssociative) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_clifford(rng, n), b = random_clifford(rng, n), c = random_clifford(rng, n);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
}

TEST(Clifford, DaggerIsAntiInvolution) {
    std::mt19937_64 rng(2);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_clifford(rng, n), b = random_clifford(rng, n);
            EXPECT_EQ(dagger(a * b), dagger(b) * dagger(a));
            EXPECT_EQ(dagger(dagger(a)), a);
            EXPECT_EQ(dagger(a * Q(kImagUnit)), dagger(a) * conj(Q(kImagUnit)));
        }
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) EXPECT_EQ(dagger(witt<Q>(n, j, false)), witt<Q>(n, j, true));
}

TEST(Witt, Examples) {
    const int n = 2;
    const auto f1 = witt<Q>(n, 1, false), f2 = witt<Q>(n, 2, false), f1d = witt<Q>(n, 1, true);
    EXPECT_TRUE((f1 * f1).is_zero());
    EXPECT_TRUE((f1 * f2 + f2 * f1).is_zero());
    EXPECT_EQ(f1 * f1d + f1d * f1, scalar(n, 1));
    EXPECT_THROW(witt<Q>(n, 3, false), DimensionError);
}

TEST(Witt, IsotropyGrassmannDuality) {
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const auto fj = witt<Q>(n, j, false), fk = witt<Q>(n, k, false);
                const auto fjd = witt<Q>(n, j, true), fkd = witt<Q>(n, k, true);
                EXPECT_TRUE((fj * fk + fk * fj).is_zero());
                EXPECT_TRUE((fjd * fkd + fkd * fjd).is_zero());
                EXPECT_EQ(fj * fkd + fkd * fj, scalar(n, j == k ? 1 : 0));
            }
}

TEST(Idempotent, Properties) {
    for (int n = 1; n <= 4; ++n) {
        const auto I = idempotent<Q>(n);
        EXPECT_EQ(I * I, I);
        EXPECT_EQ(scalar_part(I), Q(Rational(1) / pow2(n)));
        for (int j = 1; j <= n; ++j) EXPECT_TRUE((witt<Q>(n, j, false) * I).is_zero());
    }
}

TEST(SpinEuler, Examples) {
    const int n = 2;
    const auto beta = spin_euler<Q>(n), I = idempotent<Q>(n);
    const auto f1d = witt<Q>(n, 1, true), f2d = witt<Q>(n, 2, true);
    EXPECT_TRUE((beta * I).is_zero());
    EXPECT_EQ(beta * (f1d * I), f1d * I);
    EXPECT_EQ(beta * (f1d * f2d * I), f1d * f2d * I * Q(2));
}

TEST(SpinEuler, GradesTheSpinorSpace) {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n) {
        const auto beta = spin_euler<Q>(n);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const auto s = spinor_basis<Q>(n, mask);
            const int g = std::popcount(mask);
            EXPECT_EQ(beta * s, s * Q(g));
            EXPECT_EQ(grade_project(s, g), s);
        }
        Cl spinor = random_clifford(rng, n) * idempotent<Q>(n);
        Cl sum(n);
        for (int j = 0; j <= n; ++j) {
            const auto part = grade_project(spinor, j);
            EXPECT_EQ(beta * part, part * Q(j));
            sum += part;
        }
        EXPECT_EQ(sum, spinor);
    }
}

TEST(HermVector, Identities) {
    for (int n = 2; n <= 4; ++n)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto tu = rational_stiefel(n, seed);
            const auto t = herm_vector(tu.t(), false), td = herm_vector(tu.t(), true);
            EXPECT_TRUE((t * t).is_zero());
            EXPECT_EQ(dagger(t), td);
            EXPECT_EQ(scalar_part(dagger(t) * t), Q(Rational(1) / 2));
            EXPECT_EQ(t * td + td * t, scalar(n, 1));
        }
    EXPECT_THROW(herm_vector(ComplexVec<Q>{Q(1), Q(0)}, false) * Cl(3), DimensionError);
}

TEST(Clifford, FloatMatchesExact) {
    std::mt19937_64 rng(4);
    auto a = random_clifford(rng, 3), b = random_clifford(rng, 3);
    const auto exact = to_complex(a * b);
    const auto fl = to_complex(a) * to_complex(b);
    EXPECT_LT(magnitude(exact - fl), 1e-12);
}
