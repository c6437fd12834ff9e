#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace eea {

/// splitmix64 finalizer; used to derive independent stream seeds.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for a sub-stream identified by `path` below `base`, e.g.
/// derive_seed(master, {problem, run}). Order of components matters.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) noexcept;

/// Random stream used everywhere in the library. Satisfies
/// UniformRandomBitGenerator so it can feed <random> and <algorithm>.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) { }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n)
    {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double normal(double mean, double stddev)
    {
        return std::normal_distribution<double>(mean, stddev)(engine_);
    }

    bool bernoulli(double p)
    {
        if (p >= 1.0) { return true; }
        if (p <= 0.0) { return false; }
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace eea
