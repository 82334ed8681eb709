#pragma once

#include "bipoly.hpp"
#include "errors.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace unitary_radon {

/// Flattens a coefficient into complex components and back.
template <class C>
struct component_codec;

template <>
struct component_codec<Complex> {
    static std::vector<Complex> encode(const Complex& c) { return {c}; }
    static Complex decode(const std::vector<Complex>& v) { return v.at(0); }
};

/// Worker count: UNITARY_RADON_THREADS if set, else hardware concurrency.
inline unsigned default_workers() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("UNITARY_RADON_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

template <class C>
struct MonteCarloResult {
    BiPoly<C> mean;
    /// Standard error of the mean per monomial and coefficient component.
    std::map<Monomial, std::vector<double>> standard_error;
    std::size_t samples = 0;
};

inline constexpr std::size_t kMinMonteCarloSamples = 100;
inline constexpr std::size_t kMonteCarloBlock = 256;

/// Averages project(tuple) over Haar-random Stiefel tuples. Sample i uses the
/// seed derive_seed(seed, i); partial sums are formed per fixed-size block and
/// combined in block order, so results do not depend on the worker count.
template <class C, class Project>
MonteCarloResult<C> stiefel_average(int n, std::size_t samples, std::uint64_t seed, Project&& project,
                                    unsigned workers = 0) {
    if (samples < kMinMonteCarloSamples)
        throw DomainError("Monte-Carlo average needs at least " + std::to_string(kMinMonteCarloSamples) +
                          " samples");
    if (workers == 0) workers = default_workers();
    using Codec = component_codec<C>;
    struct Partial {
        std::map<Monomial, std::vector<Complex>> sum;
        std::map<Monomial, std::vector<double>> sum_sq;
    };
    const std::size_t blocks = (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<Partial> partials(blocks);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            Partial& part = partials[b];
            const std::size_t end = std::min(samples, (b + 1) * kMonteCarloBlock);
            for (std::size_t i = b * kMonteCarloBlock; i < end; ++i) {
                const auto tuple = sample_stiefel(n, derive_seed(seed, i));
                const BiPoly<C> value = project(tuple);
                for (const auto& [m, c] : value.terms()) {
                    const auto comps = Codec::encode(c);
                    auto& s = part.sum[m];
                    auto& s2 = part.sum_sq[m];
                    if (s.empty()) {
                        s.assign(comps.size(), Complex{});
                        s2.assign(comps.size(), 0.0);
                    }
                    for (std::size_t k = 0; k < comps.size(); ++k) {
                        s[k] += comps[k];
                        s2[k] += std::norm(comps[k]);
                    }
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned used = std::min<unsigned>(workers, static_cast<unsigned>(blocks));
    for (unsigned w = 1; w < used; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    Partial total;
    for (const auto& part : partials) {
        for (const auto& [m, s] : part.sum) {
            auto& acc = total.sum[m];
            auto& acc2 = total.sum_sq[m];
            if (acc.empty()) {
                acc.assign(s.size(), Complex{});
                acc2.assign(s.size(), 0.0);
            }
            const auto& s2 = part.sum_sq.at(m);
            for (std::size_t k = 0; k < s.size(); ++k) {
                acc[k] += s[k];
                acc2[k] += s2[k];
            }
        }
    }
    MonteCarloResult<C> out;
    out.samples = samples;
    out.mean = BiPoly<C>(n);
    const double N = static_cast<double>(samples);
    for (const auto& [m, s] : total.sum) {
        std::vector<Complex> mean(s.size());
        std::vector<double> se(s.size());
        const auto& s2 = total.sum_sq.at(m);
        for (std::size_t k = 0; k < s.size(); ++k) {
            mean[k] = s[k] / N;
            const double var = std::max(0.0, s2[k] / N - std::norm(mean[k]));
            se[k] = std::sqrt(var / N);
        }
        out.mean.add_term(m, Codec::decode(mean));
        out.standard_error.emplace(m, std::move(se));
    }
    return out;
}

}  // namespace unitary_radon
