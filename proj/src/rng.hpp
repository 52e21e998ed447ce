#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "error.hpp"

namespace igp {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard, and the bounded draws below avoid std::uniform_int_distribution,
/// whose output is implementation-defined. Same seed, same stream, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). Unbiased via rejection.
    std::size_t index(std::size_t n) {
        if (n == 0) throw Error(ErrorCode::InvalidArgument, "Rng::index: empty range");
        std::uint64_t bound = static_cast<std::uint64_t>(n);
        std::uint64_t threshold = (-bound) % bound;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return static_cast<std::size_t>((x - threshold) % bound);
        }
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[index(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace igp
