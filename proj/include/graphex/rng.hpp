#ifndef GRAPHEX_RNG_HPP
#define GRAPHEX_RNG_HPP

#include <cstdint>
#include <limits>

namespace graphex {

/// Purpose tags keep streams drawn for different jobs of one replicate
/// independent of each other.
enum class StreamTag : std::uint64_t {
    sample = 1,
    subsample = 2,
    bipartite = 3,
    resample = 4,
};

/// xoshiro256++ seeded through splitmix64. Satisfies
/// UniformRandomBitGenerator so it plugs into <random> distributions.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    /// Independent stream for (seed, grid point, replicate, purpose).
    /// The result depends only on the key, never on call order.
    static Rng derive(std::uint64_t seed, std::uint64_t grid, std::uint64_t replicate,
                      StreamTag tag);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe to take the log of.
    double uniform_pos() { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

    /// Exp(1) variate.
    double exponential();

    /// Poisson variate; falls back to std::poisson_distribution for large means.
    std::uint64_t poisson(double mean);

    /// Poisson variate conditioned on being >= 1.
    std::uint64_t zero_truncated_poisson(double mean);

    bool bernoulli(double p) { return uniform() < p; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/// splitmix64 finalizer, exposed for seed mixing.
std::uint64_t mix64(std::uint64_t x);

}  // namespace graphex

#endif  // GRAPHEX_RNG_HPP
