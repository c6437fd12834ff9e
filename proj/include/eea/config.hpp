#pragma once

// Experiment configuration: "key = value" lines grouped under [macro],
// [micro], [problem] and [output] sections. '#' starts a comment.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "eea/any_problem.hpp"
#include "eea/lgp.hpp"
#include "eea/interpreter.hpp"
#include "eea/realopt.hpp"

namespace eea {

enum class ProblemKind { Function, Tsp, Qap };

struct ProblemSelector {
    ProblemKind kind = ProblemKind::Function;
    realopt::FunctionId function = realopt::FunctionId::F1;
    std::size_t dimension = 5;
    double sigma = 0.01;
    realopt::F5Form f5 = realopt::F5Form::Printed;
    /// Instance file for Tsp and Qap.
    std::filesystem::path file;
};

struct ExperimentConfig {
    MacroConfig macro;
    MicroConfig micro;
    ProblemSelector problem;
    std::filesystem::path program_out = "evolved.eea";
    std::filesystem::path history_out = "history.csv";

    /// Throws InvalidConfiguration for non-positive counts or a missing instance file.
    void validate() const;
};

/// Defaults for the chosen problem kind: macro 500/80/100 and R = 500 for
/// functions; 50 macro generations and R = 25 for TSP and QAP. The TSP
/// training instance is att48.
ExperimentConfig default_config(ProblemKind kind = ProblemKind::Function);

/// Keys not given in the text take the defaults of the configured problem
/// kind. Relative instance paths resolve against base_dir.
ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Problem line: "f1".."f10" with an optional dimension, "tsp <path>" or
/// "qap <path>". ':' may replace the space ("f1:10", "tsp:att48.tsp").
ProblemSelector parse_problem_selector(std::string_view line, const std::filesystem::path& base_dir = {});

AnyProblem make_problem(const ProblemSelector& selector);

} // namespace eea
