#pragma once

// Baseline generational GA, budget matching, and evolved-vs-baseline
// comparison over a list of problems.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eea/any_problem.hpp"
#include "eea/error.hpp"
#include "eea/interpreter.hpp"
#include "eea/lgp.hpp"
#include "eea/parallel.hpp"
#include "eea/problem.hpp"
#include "eea/rng.hpp"
#include "eea/stats.hpp"

namespace eea {

struct GaConfig {
    std::size_t pop_size = 20;
    std::size_t generations = 100;
    double crossover_prob = 1.0;
    double mutation_prob = 1.0;
    std::uint64_t seed = 1;

    void validate() const;
};

struct GaResult {
    double best_fitness = std::numeric_limits<double>::infinity();
    std::size_t eval_count = 0;
};

/// Non-elitist generational GA. Each offspring: two binary tournaments,
/// crossover with crossover_prob (else a copy of the first parent), mutation
/// with mutation_prob, one evaluation. The offspring population replaces the
/// parents wholesale. Returns the best fitness seen in any generation.
template <Problem P>
GaResult standard_ga_run(const P& problem, const GaConfig& cfg, Rng& rng)
{
    cfg.validate();
    using Individual = typename P::Individual;
    const std::size_t n = cfg.pop_size;

    GaResult result;
    std::vector<Individual> pop;
    std::vector<double> fit;
    pop.reserve(n);
    fit.reserve(n);
    auto evaluate = [&](const Individual& x) {
        const double f = static_cast<double>(problem.evaluate(x));
        ++result.eval_count;
        if (f < result.best_fitness) { result.best_fitness = f; }
        return f;
    };
    for (std::size_t i = 0; i < n; ++i) {
        pop.push_back(problem.random_individual(rng));
        fit.push_back(evaluate(pop.back()));
    }

    auto tournament = [&]() {
        const std::size_t a = rng.index(n);
        const std::size_t b = rng.index(n);
        return fit[b] < fit[a] ? b : a;
    };

    std::vector<Individual> next;
    std::vector<double> next_fit;
    for (std::size_t g = 0; g < cfg.generations; ++g) {
        next.clear();
        next_fit.clear();
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t p1 = tournament();
            const std::size_t p2 = tournament();
            Individual child = rng.bernoulli(cfg.crossover_prob) ? problem.crossover(pop[p1], pop[p2], rng) : pop[p1];
            if (rng.bernoulli(cfg.mutation_prob)) {
                child = problem.mutate(child, rng);
            }
            next_fit.push_back(evaluate(child));
            next.push_back(std::move(child));
        }
        std::swap(pop, next);
        std::swap(fit, next_fit);
    }
    return result;
}

template <Problem P>
GaResult standard_ga_run(const P& problem, const GaConfig& cfg)
{
    Rng rng(cfg.seed);
    return standard_ga_run(problem, cfg, rng);
}

/// Baseline population size giving the same evaluations per generation as
/// the evolved program.
std::size_t match_budget(const EAProgram& program);

/// (baseline - evolved) / evolved * 100. Throws UndefinedDelta if evolved is 0.
double delta_percent(double baseline_mean, double evolved_mean);

/// Two decimals, truncated toward zero.
std::string format_delta(double delta);

/// Six significant digits.
std::string format_value(double value);

struct ComparisonRow {
    std::string problem;
    std::size_t runs = 0;
    SampleStats baseline;
    SampleStats evolved;
    std::optional<double> delta_percent;
    /// Set when the problem could not be run; the statistics are then empty.
    std::optional<std::string> error;
};

enum class Algorithm : std::uint64_t { Evolved = 0, Baseline = 1 };

[[nodiscard]] inline std::uint64_t comparison_seed(std::uint64_t seed, std::size_t problem_index, std::size_t run,
                                                   Algorithm alg) noexcept
{
    return derive_seed(seed, { static_cast<std::uint64_t>(problem_index), static_cast<std::uint64_t>(run),
                               static_cast<std::uint64_t>(alg) });
}

namespace detail {

GaConfig baseline_config(const EAProgram& program);
MicroConfig evolved_config(const EAProgram& program);
ComparisonRow finish_row(std::string name, std::size_t runs, const std::vector<double>& baseline,
                         const std::vector<double>& evolved);

template <Problem P>
double comparison_run(const EAProgram& program, const P& problem, std::uint64_t seed, std::size_t problem_index,
                      std::size_t run, Algorithm alg)
{
    Rng rng(comparison_seed(seed, problem_index, run, alg));
    if (alg == Algorithm::Evolved) {
        return execute_run(program, problem, evolved_config(program), rng).best_fitness;
    }
    return standard_ga_run(problem, baseline_config(program), rng).best_fitness;
}

template <typename Runner>
ComparisonRow guarded_row(const AnyProblem& problem, std::size_t runs, Runner&& runner)
{
    const std::string name = problem_name(problem);
    try {
        return runner();
    } catch (const Error& e) {
        ComparisonRow row;
        row.problem = name;
        row.runs = runs;
        row.error = e.what();
        return row;
    }
}

} // namespace detail

/// Comparison on one problem; problem_index selects its seed streams. Domain
/// errors are returned as an error row.
ComparisonRow compare_on_serial(const EAProgram& program, const AnyProblem& problem, std::size_t problem_index,
                                std::size_t runs, std::uint64_t seed);
ComparisonRow compare_on(const EAProgram& program, const AnyProblem& problem, std::size_t problem_index,
                         std::size_t runs, std::uint64_t seed, int workers = 0);

/// Reference implementation: every run of every problem, one after another.
std::vector<ComparisonRow> run_comparison_serial(const EAProgram& program, const std::vector<AnyProblem>& problems,
                                                 std::size_t runs, std::uint64_t seed);

/// Same rows as run_comparison_serial; the 2 * runs executions of each
/// problem are spread over OpenMP workers.
std::vector<ComparisonRow> run_comparison(const EAProgram& program, const std::vector<AnyProblem>& problems,
                                          std::size_t runs, std::uint64_t seed, int workers = 0);

/// Columns: problem,alg,runs,mean,stddev,delta_percent.
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);

/// Rows from a CSV of published means. Required columns: problem,
/// baseline_mean, evolved_mean. Optional: baseline_stddev, evolved_stddev,
/// runs. Other columns are ignored.
std::vector<ComparisonRow> rows_from_means(std::string_view csv);

} // namespace eea
