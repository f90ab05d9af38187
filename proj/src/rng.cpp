#include "graphex/rng.hpp"

#include <cmath>
#include <random>

namespace graphex {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& word : s_) {
        state += 0x9e3779b97f4a7c15ULL;
        word = mix64(state);
    }
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t grid, std::uint64_t replicate, StreamTag tag) {
    std::uint64_t key = mix64(seed);
    key = mix64(key ^ (grid * 0xd1342543de82ef95ULL));
    key = mix64(key ^ (replicate * 0xaf251af3b0f025b5ULL));
    key = mix64(key ^ static_cast<std::uint64_t>(tag));
    return Rng(key);
}

double Rng::exponential() { return -std::log(uniform_pos()); }

std::uint64_t Rng::poisson(double mean) {
    if (!(mean > 0.0)) return 0;
    if (mean < 30.0) {
        // inversion by sequential search
        const double limit = std::exp(-mean);
        double prod = uniform_pos();
        std::uint64_t k = 0;
        while (prod > limit) {
            prod *= uniform_pos();
            ++k;
        }
        return k;
    }
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(*this);
}

std::uint64_t Rng::zero_truncated_poisson(double mean) {
    if (mean >= 1.0) {
        for (;;) {
            const std::uint64_t k = poisson(mean);
            if (k > 0) return k;
        }
    }
    // inversion on k >= 1 with P(k) = mean^k e^{-mean} / (k! (1 - e^{-mean}))
    const double norm = -std::expm1(-mean);
    double u = uniform() * norm;
    double term = mean * std::exp(-mean);
    std::uint64_t k = 1;
    while (u > term && k < 1000) {
        u -= term;
        ++k;
        term *= mean / static_cast<double>(k);
    }
    return k;
}

}  // namespace graphex
