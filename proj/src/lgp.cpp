#include "eea/lgp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>
#include <string>

#include "eea/parallel.hpp"

namespace eea {

namespace {

void require_registers(std::size_t num_registers)
{
    if (num_registers < 2) {
        throw InvalidConfiguration("num_registers must be at least 2, got " + std::to_string(num_registers));
    }
}

std::uint32_t random_register(std::size_t num_registers, Rng& rng)
{
    return static_cast<std::uint32_t>(rng.index(num_registers));
}

double checked_fitness(const ProgramFitness& fitness_fn, const EAProgram& program)
{
    double value = 0.0;
    try {
        value = fitness_fn(program);
    } catch (const FitnessError&) {
        throw;
    } catch (const std::exception& e) {
        throw FitnessError(program, e.what());
    }
    // NaN would break the ordering the search relies on.
    return std::isnan(value) ? std::numeric_limits<double>::infinity() : value;
}

std::size_t first_min(std::span<const double> values)
{
    return static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
}

std::size_t first_max(std::span<const double> values)
{
    std::size_t worst = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[worst]) { worst = i; }
    }
    return worst;
}

} // namespace

void validate_program(const EAProgram& program)
{
    require_registers(program.num_registers);
    for (std::size_t i = 0; i < program.code.size(); ++i) {
        const auto& ins = program.code[i];
        if (ins.dest >= program.num_registers || ins.src1 >= program.num_registers || ins.src2 >= program.num_registers) {
            throw InvalidConfiguration("instruction " + std::to_string(i) + " references a register outside [0, "
                                       + std::to_string(program.num_registers) + ")");
        }
    }
}

void MacroConfig::validate() const
{
    if (pop_size < 2) {
        throw InvalidConfiguration("macro pop_size must be at least 2");
    }
    if (code_length < 1) {
        throw InvalidConfiguration("code_length must be at least 1");
    }
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) {
        throw InvalidConfiguration("crossover_prob must lie in [0, 1]");
    }
    if (mutations_per_chromosome > code_length) {
        throw InvalidConfiguration("mutations_per_chromosome exceeds code_length");
    }
}

Instruction random_instruction(std::size_t num_registers, Rng& rng)
{
    require_registers(num_registers);
    Instruction ins;
    ins.op = static_cast<Opcode>(rng.index(kOpcodeCount));
    ins.dest = random_register(num_registers, rng);
    ins.src1 = random_register(num_registers, rng);
    // Mutate has one operand; src2 stays 0 so the text form round-trips
    if (ins.op != Opcode::Mutate) {
        ins.src2 = random_register(num_registers, rng);
    }
    return ins;
}

EAProgram random_program(const MacroConfig& cfg, std::size_t num_registers, std::size_t micro_generations, Rng& rng)
{
    if (cfg.code_length < 1) {
        throw InvalidConfiguration("code_length must be at least 1");
    }
    require_registers(num_registers);

    EAProgram program;
    program.num_registers = num_registers;
    program.micro_generations = micro_generations;
    program.code.reserve(cfg.code_length);
    for (std::size_t i = 0; i < cfg.code_length; ++i) {
        program.code.push_back(random_instruction(num_registers, rng));
    }
    return program;
}

std::pair<EAProgram, EAProgram> uniform_crossover(const EAProgram& a, const EAProgram& b, std::span<const bool> swap_mask)
{
    if (a.size() != b.size() || a.num_registers != b.num_registers) {
        throw IncompatibleParents("uniform crossover needs parents of equal length and register count (got "
                                  + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " instructions)");
    }
    if (swap_mask.size() != a.size()) {
        throw InvalidConfiguration("swap mask length does not match program length");
    }

    std::pair<EAProgram, EAProgram> children { a, b };
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (swap_mask[i]) {
            std::swap(children.first.code[i], children.second.code[i]);
        }
    }
    return children;
}

std::pair<EAProgram, EAProgram> uniform_crossover(const EAProgram& a, const EAProgram& b, Rng& rng)
{
    if (a.size() != b.size() || a.num_registers != b.num_registers) {
        return uniform_crossover(a, b, std::span<const bool> {});
    }
    // std::vector<bool> has no contiguous storage
    auto mask = std::make_unique<bool[]>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        mask[i] = rng.index(2) == 1;
    }
    return uniform_crossover(a, b, std::span<const bool>(mask.get(), a.size()));
}

EAProgram mutate_program(const EAProgram& program, std::size_t k, std::size_t num_registers, Rng& rng)
{
    if (k > program.size()) {
        throw InvalidConfiguration("cannot mutate " + std::to_string(k) + " positions of a program of length "
                                   + std::to_string(program.size()));
    }
    EAProgram child = program;
    if (k == 0) {
        return child;
    }

    // partial Fisher-Yates picks k distinct positions
    std::vector<std::size_t> positions(program.size());
    std::iota(positions.begin(), positions.end(), std::size_t { 0 });
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.index(positions.size() - i);
        std::swap(positions[i], positions[j]);
        child.code[positions[i]] = random_instruction(num_registers, rng);
    }
    return child;
}

std::size_t tournament_winner(std::span<const double> fitnesses, std::size_t first, std::size_t second)
{
    return fitnesses[second] < fitnesses[first] ? second : first;
}

std::size_t binary_tournament(std::span<const double> fitnesses, Rng& rng)
{
    if (fitnesses.size() < 2) {
        throw InvalidConfiguration("binary tournament needs at least two individuals");
    }
    const std::size_t first = rng.index(fitnesses.size());
    const std::size_t second = rng.index(fitnesses.size());
    return tournament_winner(fitnesses, first, second);
}

SearchResult steady_state_search(const MacroConfig& cfg, std::size_t num_registers, std::size_t micro_generations,
                                 const ProgramFitness& fitness_fn, const SearchOptions& options)
{
    cfg.validate();
    require_registers(num_registers);

    Rng rng(cfg.master_seed);
    SearchResult result;
    result.population.reserve(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i) {
        result.population.push_back(random_program(cfg, num_registers, micro_generations, rng));
    }

    result.fitness.assign(cfg.pop_size, 0.0);
    parallel_for(cfg.pop_size, options.workers,
                 [&](std::size_t i) { result.fitness[i] = checked_fitness(fitness_fn, result.population[i]); });

    const std::size_t initial_best = first_min(result.fitness);
    result.best = result.population[initial_best];
    result.best_fitness = result.fitness[initial_best];

    const std::size_t attempts = cfg.total_attempts();
    result.history.reserve(attempts + 1);
    result.history.push_back(result.best_fitness);

    for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
        const std::size_t mother = binary_tournament(result.fitness, rng);
        const std::size_t father = binary_tournament(result.fitness, rng);

        std::pair<EAProgram, EAProgram> offspring = rng.bernoulli(cfg.crossover_prob)
            ? uniform_crossover(result.population[mother], result.population[father], rng)
            : std::pair<EAProgram, EAProgram> { result.population[mother], result.population[father] };

        EAProgram* children[2] = { &offspring.first, &offspring.second };
        for (EAProgram* child : children) {
            *child = mutate_program(*child, cfg.mutations_per_chromosome, num_registers, rng);
        }

        // fitness_fn fans its own runs out across workers
        const double child_fitness[2] = { checked_fitness(fitness_fn, *children[0]),
                                          checked_fitness(fitness_fn, *children[1]) };

        const std::size_t better = child_fitness[1] < child_fitness[0] ? 1 : 0;
        const std::size_t worst = first_max(result.fitness);
        if (child_fitness[better] < result.fitness[worst]) {
            result.population[worst] = *children[better];
            result.fitness[worst] = child_fitness[better];
            if (child_fitness[better] < result.best_fitness) {
                result.best = *children[better];
                result.best_fitness = child_fitness[better];
            }
        }

        result.history.push_back(result.best_fitness);
        if (options.on_attempt) {
            options.on_attempt(attempt, result.best_fitness);
        }
    }
    return result;
}

} // namespace eea
