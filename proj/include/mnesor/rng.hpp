#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace mnesor {

// Deterministic pseudo-random source. The floating-point draws are
// hand-rolled on top of mt19937_64 so that sequences are identical across
// platforms and standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) { seed_with(seed, 0, 0); }

    // Independent stream for (seed, stream, index); the law checker gives
    // every trial its own stream so results do not depend on run order.
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) { seed_with(seed, stream, index); }

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Log-uniform in [lo, hi], lo > 0.
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    // Uniform index in [0, n); n > 0.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

private:
    void seed_with(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),   static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                          static_cast<std::uint32_t>(index),  static_cast<std::uint32_t>(index >> 32)};
        eng_.seed(seq);
    }

    std::mt19937_64 eng_;
};

}  // namespace mnesor
