#include <doctest.h>

#include <algorithm>
#include <mutex>

#include "eea/interpreter.hpp"
#include "eea/realopt.hpp"

using namespace eea;

namespace {

EAProgram program_of(std::vector<Instruction> code, std::size_t registers, std::size_t generations)
{
    return EAProgram { std::move(code), registers, generations };
}

MicroConfig micro_for(const EAProgram& p, std::size_t runs = 1, std::uint64_t seed = 1)
{
    MicroConfig cfg;
    cfg.num_registers = p.num_registers;
    cfg.micro_generations = p.micro_generations;
    cfg.runs_per_fitness = runs;
    cfg.seed = seed;
    return cfg;
}

// Individuals are plain numbers; fitness is the number itself.
struct NumberProblem {
    using Individual = double;
    double random_individual(Rng& rng) const { return rng.uniform(0.0, 100.0); }
    double evaluate(double x) const { return x; }
    double crossover(double a, double b, Rng&) const { return (a + b) / 2.0; }
    double mutate(double x, Rng& rng) const { return x + rng.normal(0.0, 1.0); }
};

// Run r of a serial sweep with 2 registers initializes both to r + 1.
struct StaircaseProblem {
    using Individual = double;
    mutable std::size_t calls = 0;
    double random_individual(Rng&) const { return static_cast<double>(calls++ / 2 + 1); }
    double evaluate(double x) const { return x; }
    double crossover(double a, double, Rng&) const { return a; }
    double mutate(double x, Rng&) const { return x; }
};

// Records every evaluated fitness in call order (single-threaded use only).
struct RecordingProblem {
    using Individual = double;
    NumberProblem inner;
    mutable std::vector<double> seen;
    double random_individual(Rng& rng) const { return inner.random_individual(rng); }
    double evaluate(double x) const
    {
        seen.push_back(x);
        return x;
    }
    double crossover(double a, double b, Rng& rng) const { return inner.crossover(a, b, rng); }
    double mutate(double x, Rng& rng) const { return inner.mutate(x, rng); }
};

EAProgram random_micro_program(std::size_t length, std::size_t registers, std::size_t generations, Rng& rng)
{
    MacroConfig cfg;
    cfg.code_length = length;
    return random_program(cfg, registers, generations, rng);
}

} // namespace

TEST_CASE("evals_per_generation counts Crossover and Mutate")
{
    const EAProgram p = program_of({ { Opcode::Select, 0, 1, 2 },
                                     { Opcode::Crossover, 1, 2, 3 },
                                     { Opcode::Mutate, 2, 3, 0 },
                                     { Opcode::Mutate, 3, 0, 0 } },
                                   4, 5);
    CHECK(evals_per_generation(p) == 3);
    CHECK(evals_per_generation(program_of({ { Opcode::Select, 0, 1, 2 }, { Opcode::Select, 1, 0, 2 } }, 4, 5)) == 0);
}

TEST_CASE("all-Select program keeps the initial best")
{
    const EAProgram p = program_of({ { Opcode::Select, 0, 1, 2 }, { Opcode::Select, 3, 0, 1 } }, 6, 25);
    NumberProblem problem;
    Rng rng(3);
    Rng replay(3);
    double initial_best = 1e300;
    for (int i = 0; i < 6; ++i) { initial_best = std::min(initial_best, problem.random_individual(replay)); }

    CountingProblem counted(problem);
    const RunTrace t = execute_run(p, counted, micro_for(p), rng);
    CHECK(t.best_fitness == initial_best);
    CHECK(t.eval_count == 6);
    CHECK(counted.evaluations() == 6);
    CHECK(t.best_per_generation.size() == 26);
}

TEST_CASE("zero micro generations evaluates only the initial population")
{
    Rng rng(8);
    const EAProgram p = random_micro_program(10, 5, 0, rng);
    NumberProblem problem;
    const RunTrace t = execute_run(p, problem, micro_for(p), rng);
    CHECK(t.eval_count == 5);
    CHECK(t.best_per_generation.size() == 1);
    CHECK(t.best_fitness == t.best_per_generation.front());
}

TEST_CASE("zero-noise mutation leaves the best unchanged")
{
    const realopt::RealProblem f2(realopt::FunctionId::F2, 5, 0.0);
    const EAProgram p = program_of({ { Opcode::Mutate, 0, 0, 0 } }, 4, 30);
    Rng rng(12);
    const RunTrace t = execute_run(p, f2, micro_for(p), rng);
    CHECK(std::all_of(t.best_per_generation.begin(), t.best_per_generation.end(),
                      [&](double b) { return b == t.best_per_generation.front(); }));
}

TEST_CASE("evaluation count identity on random programs")
{
    Rng rng(31);
    NumberProblem problem;
    for (int k = 0; k < 50; ++k) {
        const EAProgram p = random_micro_program(20, 8, 1 + rng.index(15), rng);
        CountingProblem counted(problem);
        const RunTrace t = execute_run(p, counted, micro_for(p), rng);
        const std::size_t expected = 8 + p.micro_generations * evals_per_generation(p);
        CHECK(t.eval_count == expected);
        CHECK(counted.evaluations() == expected);
    }
}

TEST_CASE("best_per_generation is the running minimum of every stored fitness")
{
    Rng rng(44);
    for (int k = 0; k < 30; ++k) {
        const EAProgram p = random_micro_program(15, 6, 12, rng);
        RecordingProblem problem;
        const RunTrace t = execute_run(p, problem, micro_for(p), rng);
        const std::size_t per_gen = evals_per_generation(p);
        REQUIRE(problem.seen.size() == t.eval_count);
        for (std::size_t g = 0; g <= p.micro_generations; ++g) {
            const std::size_t upto = 6 + g * per_gen;
            CHECK(t.best_per_generation[g] == *std::min_element(problem.seen.begin(), problem.seen.begin() + upto));
        }
        CHECK(std::is_sorted(t.best_per_generation.rbegin(), t.best_per_generation.rend()));
        CHECK(t.best_fitness == t.best_per_generation.back());
    }
}

TEST_CASE("register count mismatch is rejected")
{
    Rng rng(1);
    const EAProgram p = random_micro_program(5, 6, 3, rng);
    MicroConfig cfg = micro_for(p);
    cfg.num_registers = 7;
    NumberProblem problem;
    CHECK_THROWS_AS(execute_run(p, problem, cfg, rng), InvalidConfiguration);
}

TEST_CASE("MicroConfig defaults and validation")
{
    MicroConfig cfg;
    CHECK(cfg.num_registers == 40);
    CHECK(cfg.micro_generations == 100);
    CHECK(cfg.runs_per_fitness == 500);
    cfg.runs_per_fitness = 0;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfiguration);
    cfg.runs_per_fitness = 1;
    cfg.num_registers = 1;
    CHECK_THROWS_AS(cfg.validate(), InvalidConfiguration);
}

TEST_CASE("program_fitness averages per-run bests")
{
    CHECK(ordered_mean({ 1.0, 2.0, 3.0, 4.0 }) == 2.5);
    CHECK_THROWS_AS(ordered_mean({}), InsufficientData);

    const EAProgram p = program_of({ { Opcode::Select, 0, 0, 1 } }, 2, 3);
    StaircaseProblem stairs;
    CHECK(program_fitness_serial(p, stairs, micro_for(p, 4)) == 2.5);
}

TEST_CASE("single run fitness equals execute_run")
{
    Rng rng(5);
    const EAProgram p = random_micro_program(12, 6, 10, rng);
    NumberProblem problem;
    const MicroConfig cfg = micro_for(p, 1, 77);
    Rng run_rng(run_seed(77, 0));
    CHECK(program_fitness(p, problem, cfg) == execute_run(p, problem, cfg, run_rng).best_fitness);
}

TEST_CASE("parallel runs match the serial reference")
{
    Rng rng(6);
    const EAProgram p = random_micro_program(20, 10, 20, rng);
    const realopt::RealProblem f1(realopt::FunctionId::F1);
    const MicroConfig cfg = micro_for(p, 37, 5);
    const auto serial = run_bests_serial(p, f1, cfg);
    CHECK(run_bests(p, f1, cfg, 1) == serial);
    CHECK(run_bests(p, f1, cfg, 4) == serial);
    CHECK(program_fitness(p, f1, cfg, 3) == program_fitness_serial(p, f1, cfg));

    const auto traces = execute_runs(p, f1, cfg, 4);
    REQUIRE(traces.size() == serial.size());
    for (std::size_t r = 0; r < traces.size(); ++r) { CHECK(traces[r].best_fitness == serial[r]); }
}

TEST_CASE("runs are reproducible")
{
    Rng rng(2);
    const EAProgram p = random_micro_program(20, 8, 15, rng);
    NumberProblem problem;
    Rng a(123);
    Rng b(123);
    const RunTrace x = execute_run(p, problem, micro_for(p), a);
    const RunTrace y = execute_run(p, problem, micro_for(p), b);
    CHECK(x.best_per_generation == y.best_per_generation);
    CHECK(x.eval_count == y.eval_count);
}
