// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace boir {

/// Deterministic random source. All randomized behaviour in the library draws
/// through this wrapper so that a fixed seed reproduces identical artifacts
/// independent of the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Decorrelated stream for the same seed (used when resuming a run).
    Rng(std::uint64_t seed, std::uint64_t stream)
        : gen_(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection sampling keeps it exactly uniform.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long uniform_int(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return (gen_() >> 63) != 0; }

private:
    std::mt19937_64 gen_;
};

}  // namespace boir
