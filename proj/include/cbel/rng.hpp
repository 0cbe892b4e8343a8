#pragma once

// Seeded random number generation with derived substreams.
//
// Replication r of a run seeded with s draws from the stream (s, r),
// so runs are reproducible bit-for-bit no matter how replications are
// scheduled across threads. Samplers are implemented from raw 64-bit
// draws (inversion, Box-Muller, Marsaglia-Tsang) instead of
// std::*_distribution, whose output sequences are implementation-defined.

#include <cmath>
#include <cstdint>
#include <random>

namespace cbel {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derive a well-separated seed for substream `stream` of master seed `seed`.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) : engine_(substream_seed(seed, stream)) {}

    // Uniform on (0, 1]: 53-bit mantissa, never zero (safe under log).
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform on [0, 1).
    double uniform_halfopen() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double exponential(double rate) {
        return -std::log(uniform()) / rate;
    }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform_halfopen();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double lognormal(double mu, double sigma) {
        return std::exp(mu + sigma * normal());
    }

    // Marsaglia-Tsang; shape < 1 boosted via gamma(shape+1) * U^(1/shape).
    double gamma(double shape, double scale) {
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
                return d * v * scale;
            }
        }
    }

    bool bernoulli(double p) { return uniform_halfopen() < p; }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace cbel
