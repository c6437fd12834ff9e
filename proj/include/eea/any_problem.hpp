#pragma once

#include <string>
#include <variant>

#include "eea/qap.hpp"
#include "eea/realopt.hpp"
#include "eea/tsp.hpp"

namespace eea {

using AnyProblem = std::variant<realopt::RealProblem, tsp::TspProblem, qap::QapProblem>;

inline std::string problem_name(const AnyProblem& problem)
{
    return std::visit([](const auto& p) { return std::string(p.name()); }, problem);
}

} // namespace eea
