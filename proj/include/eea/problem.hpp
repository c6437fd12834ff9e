#pragma once

#include <atomic>
#include <concepts>
#include <cstddef>

#include "eea/rng.hpp"

namespace eea {

/// What a domain must provide to be driven by the micro-level EA and the
/// baseline GA. Fitness is minimized. All members must be safe to call
/// concurrently on a const problem.
template <typename P>
concept Problem = requires(const P& problem, const typename P::Individual& x, Rng& rng) {
    typename P::Individual;
    { problem.random_individual(rng) } -> std::same_as<typename P::Individual>;
    { problem.evaluate(x) } -> std::convertible_to<double>;
    { problem.crossover(x, x, rng) } -> std::same_as<typename P::Individual>;
    { problem.mutate(x, rng) } -> std::same_as<typename P::Individual>;
};

/// Wraps a problem and counts evaluate() calls.
template <Problem P>
class CountingProblem {
public:
    using Individual = typename P::Individual;

    explicit CountingProblem(const P& inner) : inner_(&inner) { }

    Individual random_individual(Rng& rng) const { return inner_->random_individual(rng); }

    double evaluate(const Individual& x) const
    {
        evaluations_.fetch_add(1, std::memory_order_relaxed);
        return inner_->evaluate(x);
    }

    Individual crossover(const Individual& a, const Individual& b, Rng& rng) const { return inner_->crossover(a, b, rng); }
    Individual mutate(const Individual& x, Rng& rng) const { return inner_->mutate(x, rng); }

    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_.load(); }
    void reset() noexcept { evaluations_.store(0); }

private:
    const P* inner_;
    mutable std::atomic<std::size_t> evaluations_ { 0 };
};

} // namespace eea
