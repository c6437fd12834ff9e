#include "eea/interpreter.hpp"

#include <algorithm>

namespace eea {

void MicroConfig::validate() const
{
    if (num_registers < 2) {
        throw InvalidConfiguration("micro num_registers must be at least 2");
    }
    if (runs_per_fitness < 1) {
        throw InvalidConfiguration("runs_per_fitness must be at least 1");
    }
}

std::size_t evals_per_generation(const EAProgram& program)
{
    return static_cast<std::size_t>(std::count_if(program.code.begin(), program.code.end(),
                                                  [](const Instruction& ins) { return ins.op != Opcode::Select; }));
}

double ordered_mean(const std::vector<double>& values)
{
    if (values.empty()) {
        throw InsufficientData("mean of an empty sample");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

namespace detail {

void check_run_preconditions(const EAProgram& program, const MicroConfig& cfg)
{
    if (program.num_registers != cfg.num_registers) {
        throw InvalidConfiguration("program uses " + std::to_string(program.num_registers) + " registers but the run is configured for "
                                   + std::to_string(cfg.num_registers));
    }
    cfg.validate();
    validate_program(program);
}

} // namespace detail

} // namespace eea
