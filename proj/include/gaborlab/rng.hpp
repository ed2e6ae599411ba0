#pragma once

#include <cstdint>
#include <cmath>
#include <complex>
#include <numbers>

namespace gaborlab {

// Counter-based deterministic generator. Draw i of stream `seed` is
//   splitmix64_mix(seed + (i+1) * 0x9E3779B97F4A7C15)
// so the i-th value depends only on (seed, i), never on platform state.
// Gaussian variates use Box-Muller and always consume exactly two draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53-bit mantissa
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [a,b)
    double next_uniform(double a, double b) { return a + (b - a) * next_double(); }

    double next_gaussian() {
        const double u1 = 1.0 - next_double();  // (0,1]
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::complex<double> next_complex_gaussian() {
        const double re = next_gaussian();
        const double im = next_gaussian();
        return {re, im};
    }

    // independent substream for check k of the same master seed
    CounterRng substream(std::uint64_t k) const {
        CounterRng r(seed_ ^ (0xD1B54A32D192ED03ULL * (k + 1)));
        return r;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace gaborlab
