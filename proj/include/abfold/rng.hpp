#pragma once

// Seedable random source shared by the optimizer and the batch runner.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard, so runs are reproducible across compilers. Doubles take the top 53
// bits; bounded integers use Lemire's multiply-and-reject method, which is
// unbiased.

#include "abfold/geometry.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>

namespace abfold {

template <class R>
concept UniformSource = requires(R& r) {
    { r.uniform() } -> std::convertible_to<double>;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n)
    {
        __extension__ using u128 = unsigned __int128;
        const std::uint64_t bound = n;
        u128 m = static_cast<u128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<u128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::size_t>(m >> 64);
    }

    /// Uniform angle in (-pi, pi]: -pi + 2 pi rand, with -pi folded onto pi.
    double angle() { return wrap_angle(-kPi + kTwoPi * uniform()); }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of run `index` in a batch started from `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    return splitmix64(base + 0x9E3779B97F4A7C15ULL * (index + 1));
}

} // namespace abfold
