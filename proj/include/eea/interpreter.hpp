#pragma once

// Executes an EAProgram as a generational EA: the population array is
// randomly initialized, then the instruction list is applied once per
// generation. The result of a run is the best fitness ever stored in any
// register.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "eea/error.hpp"
#include "eea/lgp.hpp"
#include "eea/parallel.hpp"
#include "eea/problem.hpp"
#include "eea/rng.hpp"

namespace eea {

struct MicroConfig {
    std::size_t num_registers = 40;
    std::size_t micro_generations = 100;
    std::size_t runs_per_fitness = 500;
    /// Run r draws from Rng(run_seed(seed, r)).
    std::uint64_t seed = 1;

    void validate() const;
};

[[nodiscard]] inline std::uint64_t run_seed(std::uint64_t seed, std::size_t run) noexcept
{
    return derive_seed(seed, { static_cast<std::uint64_t>(run) });
}

struct RunTrace {
    /// Entry 0 is the initial population; entry g is the best after g generations.
    std::vector<double> best_per_generation;
    std::size_t eval_count = 0;
    double best_fitness = std::numeric_limits<double>::infinity();
};

/// Instructions that create a new individual (Crossover or Mutate).
std::size_t evals_per_generation(const EAProgram& program);

namespace detail {

void check_run_preconditions(const EAProgram& program, const MicroConfig& cfg);

} // namespace detail

template <Problem P>
RunTrace execute_run(const EAProgram& program, const P& problem, const MicroConfig& cfg, Rng& rng)
{
    detail::check_run_preconditions(program, cfg);

    struct Slot {
        typename P::Individual individual;
        double fitness;
    };

    RunTrace trace;
    trace.best_per_generation.reserve(cfg.micro_generations + 1);
    double best = std::numeric_limits<double>::infinity();

    auto store = [&](Slot& slot, typename P::Individual&& individual) {
        slot.fitness = static_cast<double>(problem.evaluate(individual));
        slot.individual = std::move(individual);
        ++trace.eval_count;
        if (slot.fitness < best) { best = slot.fitness; }
    };

    std::vector<Slot> pop(cfg.num_registers);
    for (auto& slot : pop) {
        store(slot, problem.random_individual(rng));
    }
    trace.best_per_generation.push_back(best);

    for (std::size_t generation = 0; generation < cfg.micro_generations; ++generation) {
        for (const Instruction& ins : program.code) {
            switch (ins.op) {
            case Opcode::Select: {
                // fitness is cached, so a copy never re-evaluates
                const std::size_t winner = pop[ins.src2].fitness < pop[ins.src1].fitness ? ins.src2 : ins.src1;
                if (winner != ins.dest) { pop[ins.dest] = pop[winner]; }
                break;
            }
            case Opcode::Crossover:
                store(pop[ins.dest], problem.crossover(pop[ins.src1].individual, pop[ins.src2].individual, rng));
                break;
            case Opcode::Mutate:
                store(pop[ins.dest], problem.mutate(pop[ins.src1].individual, rng));
                break;
            }
        }
        trace.best_per_generation.push_back(best);
    }

    trace.best_fitness = best;
    return trace;
}

/// Best fitness of every run, in run order, computed one run after another.
template <Problem P>
std::vector<double> run_bests_serial(const EAProgram& program, const P& problem, const MicroConfig& cfg)
{
    cfg.validate();
    std::vector<double> bests(cfg.runs_per_fitness);
    for (std::size_t r = 0; r < bests.size(); ++r) {
        Rng rng(run_seed(cfg.seed, r));
        bests[r] = execute_run(program, problem, cfg, rng).best_fitness;
    }
    return bests;
}

/// Same values as run_bests_serial, runs spread over OpenMP workers.
template <Problem P>
std::vector<double> run_bests(const EAProgram& program, const P& problem, const MicroConfig& cfg, int workers = 0)
{
    cfg.validate();
    std::vector<double> bests(cfg.runs_per_fitness);
    parallel_for(bests.size(), workers, [&](std::size_t r) {
        Rng rng(run_seed(cfg.seed, r));
        bests[r] = execute_run(program, problem, cfg, rng).best_fitness;
    });
    return bests;
}

/// Full traces of every run, in run order.
template <Problem P>
std::vector<RunTrace> execute_runs(const EAProgram& program, const P& problem, const MicroConfig& cfg, int workers = 0)
{
    cfg.validate();
    std::vector<RunTrace> traces(cfg.runs_per_fitness);
    parallel_for(traces.size(), workers, [&](std::size_t r) {
        Rng rng(run_seed(cfg.seed, r));
        traces[r] = execute_run(program, problem, cfg, rng);
    });
    return traces;
}

/// Mean with a fixed summation order, so the result does not depend on how
/// the values were produced.
double ordered_mean(const std::vector<double>& values);

/// Mean best fitness over cfg.runs_per_fitness independent runs.
template <Problem P>
double program_fitness_serial(const EAProgram& program, const P& problem, const MicroConfig& cfg)
{
    return ordered_mean(run_bests_serial(program, problem, cfg));
}

template <Problem P>
double program_fitness(const EAProgram& program, const P& problem, const MicroConfig& cfg, int workers = 0)
{
    return ordered_mean(run_bests(program, problem, cfg, workers));
}

} // namespace eea
