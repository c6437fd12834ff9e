// Serial reference kernels against their OpenMP counterparts. The Arg is the
// worker count of the parallel variant; outputs are identical by contract.

#include <filesystem>
#include <vector>

#include <benchmark/benchmark.h>

#include "eea/any_problem.hpp"
#include "eea/harness.hpp"
#include "eea/interpreter.hpp"
#include "eea/lgp.hpp"
#include "eea/qap.hpp"
#include "eea/realopt.hpp"
#include "eea/rng.hpp"
#include "eea/tsp.hpp"

namespace {

eea::EAProgram sample_program()
{
    eea::MacroConfig macro;
    macro.code_length = 40;
    eea::Rng rng(2024);
    return eea::random_program(macro, 20, 50, rng);
}

eea::MicroConfig sample_micro()
{
    return eea::MicroConfig { 20, 50, 64, 7 };
}

const eea::realopt::RealProblem& f7()
{
    static const eea::realopt::RealProblem problem(eea::realopt::FunctionId::F7, 10);
    return problem;
}

std::vector<eea::AnyProblem> comparison_problems()
{
    const std::filesystem::path data = EEA_BENCH_DATA;
    return {
        eea::realopt::RealProblem(eea::realopt::FunctionId::F1, 5),
        eea::tsp::TspProblem(eea::tsp::load_tsplib(data / "att48.tsp")),
        eea::qap::QapProblem(eea::qap::load_qaplib(data / "chr12c.dat")),
    };
}

void BM_ProgramFitnessSerial(benchmark::State& state)
{
    const auto program = sample_program();
    const auto micro = sample_micro();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eea::program_fitness_serial(program, f7(), micro));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * micro.runs_per_fitness));
}
BENCHMARK(BM_ProgramFitnessSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ProgramFitnessParallel(benchmark::State& state)
{
    const auto program = sample_program();
    const auto micro = sample_micro();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eea::program_fitness(program, f7(), micro, workers));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * micro.runs_per_fitness));
}
BENCHMARK(BM_ProgramFitnessParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ComparisonSerial(benchmark::State& state)
{
    const auto program = sample_program();
    const auto problems = comparison_problems();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eea::run_comparison_serial(program, problems, 8, 11));
    }
}
BENCHMARK(BM_ComparisonSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ComparisonParallel(benchmark::State& state)
{
    const auto program = sample_program();
    const auto problems = comparison_problems();
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eea::run_comparison(program, problems, 8, 11, workers));
    }
}
BENCHMARK(BM_ComparisonParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
