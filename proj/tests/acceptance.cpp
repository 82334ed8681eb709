// Acceptance runner: one line per criterion, exit 3 when any gating check fails.

#include <unitary_radon/io.hpp>
#include <unitary_radon/verify.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace ur = unitary_radon;
namespace v = unitary_radon::verify;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kSamples = 100000;

struct Line {
    std::string id;
    v::Check check;
};

class Ledger {
public:
    void add(const std::string& id, v::Check c) {
        print(id, c);
        lines_.push_back({id, std::move(c)});
    }

    bool passed() const {
        for (const auto& l : lines_)
            if (l.check.gate && !l.check.passed) return false;
        return true;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& l : lines_)
            if (l.check.gate && !l.check.passed) out.push_back(l.id);
        return out;
    }

private:
    static void print(const std::string& id, const v::Check& c) {
        const char* tag = !c.gate ? (c.passed ? "INFO" : "DISCREPANCY") : (c.passed ? "PASS" : "FAIL");
        std::printf("[%s] %-4s %s | measured %.6g, tolerance %.3g | %s\n", tag, id.c_str(), c.name.c_str(), c.measured,
                    c.tolerance, c.detail.c_str());
        std::fflush(stdout);
    }

    std::vector<Line> lines_;
};

/// Folds the per-dimension checks into one check per identity family.
v::Check merge(std::string name, const std::vector<v::Check>& parts) {
    v::Check out{std::move(name), true, 0.0, 0.0, {}, true};
    for (const auto& p : parts) {
        out.passed = out.passed && p.passed;
        out.measured += p.measured;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += p.name + ": " + p.detail;
    }
    return out;
}

std::string serialize(const std::vector<v::Check>& checks) {
    ur::io::json arr = ur::io::json::array();
    for (const auto& c : checks) arr.push_back(ur::io::check_json(c));
    return arr.dump();
}

std::vector<v::Check> full_verify_suite() {
    std::vector<v::Check> all;
    for (const char* space : {"ball-harmonic", "ball-holomorphic", "fock", "l2", "hermitian"}) {
        v::SuiteOptions o;
        o.seed = kSeed;
        for (auto& c : v::run_space_suite(space, o)) all.push_back(std::move(c));
    }
    return all;
}

v::Check determinism() {
    const std::string first = serialize(full_verify_suite());
    const std::string second = serialize(full_verify_suite());

    // Monte-Carlo sums are formed per fixed block, so the worker count must not change a single bit.
    const auto f = ur::io::parse_polynomial<ur::Complex>(ur::io::json::parse(
        R"({"n":2,"terms":[{"alpha":[1,0],"beta":[0,1],"re":1,"im":0.5},{"alpha":[0,1],"beta":[0,0],"re":-2,"im":0}]})"));
    auto mc_json = [&](unsigned workers) {
        const auto mc = ur::ball::dual_monte_carlo(f, 2, 5000, kSeed, std::nullopt, workers);
        ur::io::json se = ur::io::json::array();
        for (const auto& [m, s] : mc.standard_error) se.push_back(s);
        return ur::io::polynomial_json(mc.mean).dump() + se.dump();
    };
    const std::string one = mc_json(1), four = mc_json(4), seven = mc_json(7);

    const bool suite_same = first == second;
    const bool workers_same = one == four && one == seven;
    v::Check c{"repeated verify suite and Monte-Carlo worker counts give byte-identical reports", suite_same && workers_same,
               0.0, 0.0, {}, true};
    c.measured = double(!suite_same) + double(!workers_same);
    c.detail = "suite report " + std::to_string(first.size()) + " bytes " + (suite_same ? "identical" : "differs") +
               "; Monte-Carlo with 1/4/7 workers " + (workers_same ? "identical" : "differs") + "; sha256 " +
               ur::io::sha256_hex(first).substr(0, 16);
    return c;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    Ledger L;

    // 1. Orthogonality tables.
    L.add("1a", merge("sphere Gram = gamma_{p,q} delta, p,q,w,v<=4, n=2,3",
                      {v::sphere_gram(2, 4, kSeed), v::sphere_gram(3, 4, kSeed)}));
    L.add("1b", merge("Fock Gram = 2^p p! delta, n=2,3", {v::fock_gram(2, 8, kSeed), v::fock_gram(3, 8, kSeed)}));
    L.add("1c", merge("L2 Gram = 2^k k! delta, direct and through Segal-Bargmann, n=2,3",
                      {v::l2_gram(2, 6, kSeed), v::l2_gram(3, 6, kSeed)}));

    // 2. Kernel closed forms at 100 points, |z|,|u| <= 0.3, truncation 40.
    for (int n : {2, 3}) {
        const auto sfx = std::string(n == 2 ? "" : "'");
        L.add("2a" + sfx, v::ball_kernel_agreement(n, false, 100, kSeed + n));
        L.add("2b" + sfx, v::ball_kernel_agreement(n, true, 100, kSeed + n));
        L.add("2c" + sfx, v::fock_kernel_agreement(n, 100, kSeed + n));
    }

    // 3. Split kernels: partition gates, nominal hypergeometric forms are reported.
    for (int n : {2, 3}) {
        const auto sfx = std::string(n == 2 ? "" : "'");
        L.add("3a" + sfx, v::split_kernel_partition(n, 50, kSeed + n));
        L.add("3b" + sfx, v::split_kernel_nominal(n, ur::Branch::p_ge_q, 50, kSeed + n));
        L.add("3c" + sfx, v::split_kernel_nominal(n, ur::Branch::p_lt_q, 50, kSeed + n));
    }

    // 4. Projection laws on 50 random valid inputs each.
    L.add("4a", v::szego_projection_laws(50, 4, kSeed));
    L.add("4b", v::bargmann_projection_laws(50, 4, kSeed));
    L.add("4c", v::l2_projection_laws(50, 4, kSeed));
    L.add("4d", v::herm_projection_laws(50, 2, kSeed));

    // 5. Dual constants against Monte-Carlo Stiefel integration, N = 1e5, p+q <= 2, n = 2.
    L.add("5a", v::ball_dual_monte_carlo(2, 2, kSamples, kSeed));
    L.add("5b", v::fock_dual_monte_carlo(2, 2, kSamples, kSeed));
    L.add("5c", v::herm_dual_monte_carlo(2, 1, 2, kSamples, kSeed));
    L.add("5d", v::ball_dual_ratio(2, 2, 2, kSamples, kSeed));

    // 6. Inversion round trips, n alternating 2 and 3.
    L.add("6a", v::holomorphic_round_trip(20, 5, kSeed));
    L.add("6b", v::harmonic_round_trip(20, 5, kSeed));
    L.add("6c", v::fock_round_trip(20, 5, kSeed));
    L.add("6d", v::l2_round_trip(20, 5, kSeed));
    L.add("6e", v::herm_round_trip(10, 3, kSeed, ur::Branch::p_lt_q));
    L.add("6e'", v::herm_round_trip(10, 3, kSeed, ur::Branch::p_ge_q));

    // 7. Clifford identity suite, n = 2, 3, 4.
    L.add("7a", merge("Witt relations, I^2 = I, beta-grading eigenvalues, n=2,3,4",
                      {v::clifford_identities(2), v::clifford_identities(3), v::clifford_identities(4)}));
    L.add("7b", merge("tau^2 = 0, tau tau^dagger tau = 4 tau on 100 tuples, n=2,3,4",
                      {v::null_tau_identities(2, 100, kSeed), v::null_tau_identities(3, 100, kSeed),
                       v::null_tau_identities(4, 100, kSeed)}));
    L.add("7c", merge("Dirac residuals of hmono waves identically zero, n=2,3,4",
                      {v::hmono_dirac_residuals(2, 4, kSeed), v::hmono_dirac_residuals(3, 3, kSeed),
                       v::hmono_dirac_residuals(4, 2, kSeed)}));
    L.add("7d", merge("hmono wave norms gamma_{p,q} tau^dagger tau, n=2,3,4",
                      {v::herm_norm_table(2, 2, kSeed), v::herm_norm_table(3, 2, kSeed), v::herm_norm_table(4, 1, kSeed)}));

    // 8. Cross-module consistency.
    L.add("8a", v::commuting_square(30, 5, kSeed));
    L.add("8b", merge("Hermitian kernel = (1/4) Szego kernel x tau tau^dagger as formal series, n=2,3",
                      {v::herm_kernel_factor(2, 5, kSeed), v::herm_kernel_factor(3, 4, kSeed)}));
    L.add("8c", v::mehler_oracle(100, kSeed));

    // 9. Constant-identity ledger, exact, p,q <= 3.
    L.add("9a", v::gamma_lambda_identity(4, 3));
    L.add("9b", v::second_branch_closed_form(4, 3));
    L.add("9c", v::herm_constant_products(4, 3, ur::Branch::p_lt_q));
    L.add("9d", v::herm_constant_products(4, 3, ur::Branch::p_ge_q));

    // 10. Determinism.
    L.add("10", determinism());

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto failed = L.failures();
    std::string ids;
    for (const auto& id : failed) ids += (ids.empty() ? "" : ", ") + id;
    std::printf("%s: %zu gating failure(s)%s%s (%.1f s)\n", L.passed() ? "ACCEPTED" : "REJECTED", failed.size(),
                failed.empty() ? "" : ": ", ids.c_str(), secs);
    return L.passed() ? 0 : 3;
}
