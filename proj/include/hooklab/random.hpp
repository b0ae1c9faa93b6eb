#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "rational.hpp"

namespace hooklab {

/// Deterministic generator. std::mt19937_64 has a fully specified output
/// sequence; the bounded draws below avoid std::uniform_int_distribution,
/// whose algorithm differs between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for one instance of a batch, so results do not
    /// depend on the order or the parallelism with which instances run.
    static Rng for_instance(std::uint64_t seed, std::string_view key)
    {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char ch : key) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        return Rng(splitmix(seed ^ splitmix(h)));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

    /// Numerator in [-num_max, num_max] \ {0}, denominator in [1, den_max].
    Rational rational(long num_max = 20, long den_max = 20)
    {
        long p = uniform(1, 2 * num_max);
        p = p <= num_max ? p - num_max - 1 : p - num_max;
        return make_rational(p, uniform(1, den_max));
    }

private:
    static std::uint64_t splitmix(std::uint64_t x)
    {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace hooklab
