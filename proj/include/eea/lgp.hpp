#pragma once

// Macro-level search: steady-state evolution of fixed-length linear programs
// whose instructions are genetic operators acting on a population array.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eea/error.hpp"
#include "eea/rng.hpp"

namespace eea {

enum class Opcode : std::uint8_t { Select, Crossover, Mutate };

inline constexpr std::size_t kOpcodeCount = 3;

/// Pop[dest] = op(Pop[src1], Pop[src2]). Mutate ignores src2, which is kept at 0.
struct Instruction {
    Opcode op = Opcode::Select;
    std::uint32_t dest = 0;
    std::uint32_t src1 = 0;
    std::uint32_t src2 = 0;

    friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// An evolved EA: the instruction list is the body of one micro generation.
struct EAProgram {
    std::vector<Instruction> code;
    std::size_t num_registers = 0;
    std::size_t micro_generations = 0;

    [[nodiscard]] std::size_t size() const noexcept { return code.size(); }

    friend bool operator==(const EAProgram&, const EAProgram&) = default;
};

/// Throws InvalidConfiguration if an index is out of range or the register
/// count is below two.
void validate_program(const EAProgram& program);

struct MacroConfig {
    std::size_t pop_size = 500;
    std::size_t code_length = 80;
    std::size_t generations = 100;
    double crossover_prob = 0.7;
    std::size_t mutations_per_chromosome = 5;
    std::uint64_t master_seed = 1;

    void validate() const;

    /// Replacement attempts making up one generation: each attempt breeds two
    /// offspring, so a generation produces pop_size offspring.
    [[nodiscard]] std::size_t attempts_per_generation() const noexcept
    {
        return pop_size / 2 > 0 ? pop_size / 2 : 1;
    }

    [[nodiscard]] std::size_t total_attempts() const noexcept
    {
        return generations * attempts_per_generation();
    }
};

Instruction random_instruction(std::size_t num_registers, Rng& rng);

EAProgram random_program(const MacroConfig& cfg, std::size_t num_registers, std::size_t micro_generations, Rng& rng);

/// Position-wise exchange; swap_mask[i] == true swaps gene i between children.
std::pair<EAProgram, EAProgram> uniform_crossover(const EAProgram& a, const EAProgram& b, std::span<const bool> swap_mask);

/// Each position is swapped with probability 1/2.
std::pair<EAProgram, EAProgram> uniform_crossover(const EAProgram& a, const EAProgram& b, Rng& rng);

/// Redraws k distinct positions with fresh random instructions.
EAProgram mutate_program(const EAProgram& program, std::size_t k, std::size_t num_registers, Rng& rng);

/// Winner of a tournament between two given contestants (minimization; a tie
/// goes to `first`).
std::size_t tournament_winner(std::span<const double> fitnesses, std::size_t first, std::size_t second);

/// Draws two uniform indices (possibly equal) and returns the fitter.
std::size_t binary_tournament(std::span<const double> fitnesses, Rng& rng);

using ProgramFitness = std::function<double(const EAProgram&)>;

struct SearchOptions {
    /// Cap on concurrent fitness evaluations; 0 means the OpenMP default.
    int workers = 0;
    /// Called after every replacement attempt with (attempt, best fitness).
    std::function<void(std::size_t, double)> on_attempt;
};

struct SearchResult {
    EAProgram best;
    double best_fitness = 0.0;
    /// history[0] is the initial population best; history[g] is the best after
    /// g replacement attempts.
    std::vector<double> history;
    /// Final population and its fitness values, in slot order.
    std::vector<EAProgram> population;
    std::vector<double> fitness;
};

/// Raised when the fitness function fails; carries the offending program.
class FitnessError : public Error {
public:
    FitnessError(EAProgram program, const std::string& what)
        : Error("fitness evaluation failed: " + what)
        , program_(std::move(program))
    {
    }

    [[nodiscard]] const EAProgram& program() const noexcept { return program_; }

private:
    EAProgram program_;
};

/// Steady-state LGP: binary-tournament parents, uniform crossover with
/// crossover_prob (parents copied otherwise), both offspring mutated and
/// evaluated; the better one replaces the current worst only if strictly
/// better. Returns the best program ever seen.
SearchResult steady_state_search(const MacroConfig& cfg, std::size_t num_registers, std::size_t micro_generations,
                                 const ProgramFitness& fitness_fn, const SearchOptions& options = {});

} // namespace eea
