#pragma once

#include "realspace.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <vector>

/// Approximate least-squares projection of sampled functions onto finite Hermite expansions.
namespace unitary_radon::realspace {

struct GridSample {
    std::vector<double> x;
    Complex value;
};

struct HermiteFit {
    HermiteExpansion<Complex> expansion;
    double rms_residual = 0.0;
    int rank = 0;
    int basis_size = 0;
};

/// Least-squares fit over all psi_alpha with |alpha| <= max_degree. Result is approximate.
inline HermiteFit fit_hermite_expansion(int n, const std::vector<GridSample>& grid, int max_degree) {
    if (n < 1) throw DimensionError("fit_hermite_expansion: n must be positive");
    if (max_degree < 0) throw DomainError("fit_hermite_expansion: negative degree");
    std::vector<MultiIndex> basis;
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& a : multi_indices(n, k)) basis.push_back(a);
    const auto m = static_cast<Eigen::Index>(grid.size());
    const auto cols = static_cast<Eigen::Index>(basis.size());
    if (m < cols) throw DomainError("fit_hermite_expansion: fewer samples than basis functions");

    Eigen::MatrixXd a(m, cols);
    Eigen::MatrixXd rhs(m, 2);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto& s = grid[i];
        if (static_cast<int>(s.x.size()) != n) throw DimensionError("fit_hermite_expansion: sample dimension mismatch");
        double r2 = 0.0;
        for (double v : s.x) r2 += v * v;
        const double gauss = std::exp(-r2 / 4);
        for (Eigen::Index c = 0; c < cols; ++c) {
            double v = gauss;
            for (int j = 0; j < n; ++j) v *= hermite_value(basis[c][j], s.x[j]);
            a(i, c) = v;
        }
        rhs(i, 0) = s.value.real();
        rhs(i, 1) = s.value.imag();
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd sol = qr.solve(rhs);

    HermiteFit out{HermiteExpansion<Complex>(n), 0.0, static_cast<int>(qr.rank()), static_cast<int>(cols)};
    for (Eigen::Index c = 0; c < cols; ++c) out.expansion.add(basis[c], {sol(c, 0), sol(c, 1)});
    out.rms_residual = std::sqrt((a * sol - rhs).squaredNorm() / static_cast<double>(m));
    return out;
}

}  // namespace unitary_radon::realspace
