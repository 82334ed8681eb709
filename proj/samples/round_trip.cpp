// Exact round trip on the unit ball: project onto one tuple, average over all tuples, invert.

#include <unitary_radon/ball.hpp>
#include <unitary_radon/sampling.hpp>

#include <iostream>

int main() {
    using namespace unitary_radon;
    using Q = GaussRational;

    // z1 zbar2 - z2 zbar1 + 3i zbar1^2 is harmonic in C^2.
    BiPoly<Q> f(2);
    f.add_term(Monomial({1, 0}, {0, 1}), Q(1));
    f.add_term(Monomial({0, 1}, {1, 0}), Q(-1));
    f.add_term(Monomial({0, 0}, {2, 0}), Q(0, 3));

    const auto tuple = rational_stiefel(2, 7);
    const auto projection = ball::szego_radon(f, tuple);
    std::cout << "tuple t = (" << tuple.t()[0] << ", " << tuple.t()[1] << ")\n";
    for (const auto& [d, c] : projection.coefficients) std::cout << "  (p,q) = (" << d.p << "," << d.q << "): " << c << '\n';

    // Each branch of the dual transform has its own inversion operator.
    const auto ge = ball::dual_exact(f, 2, Branch::p_ge_q);
    const auto lt = ball::dual_exact(f, 2, Branch::p_lt_q);
    const auto back = ball::invert_general(ge, 2, Branch::p_ge_q) + ball::invert_general(lt, 2, Branch::p_lt_q);
    std::cout << "dual transform:  " << ge + lt << '\n';
    std::cout << "recovered f:     " << back << '\n';
    std::cout << (back == f ? "exact round trip" : "round trip FAILED") << '\n';
    return back == f ? 0 : 1;
}
