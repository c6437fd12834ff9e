#pragma once

// Real-vector function optimization: ten box-constrained test functions,
// midpoint (convex, alpha = 0.5) recombination and clamped Gaussian mutation.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eea/rng.hpp"

namespace eea::realopt {

enum class FunctionId { F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10 };

inline constexpr int kFunctionCount = 10;

/// "f1".."f10" (case-insensitive); throws InvalidInput otherwise.
FunctionId parse_function_id(std::string_view token);
std::string to_string(FunctionId fid);

/// f5 is max{x_i} as tabulated; Absolute selects the usual max|x_i|.
enum class F5Form { Printed, Absolute };

struct RealDomain {
    double min_x = -10.0;
    double max_x = 10.0;
    std::size_t n = 5;

    void validate() const;
};

/// Box [min_x, max_x]^n each function is defined on.
RealDomain default_domain(FunctionId fid, std::size_t n = 5);

/// Tabulated minimum value (f10: -n * 418.98).
double known_minimum(FunctionId fid, std::size_t n);

double evaluate(FunctionId fid, std::span<const double> x, F5Form f5 = F5Form::Printed);

/// Component-wise midpoint.
std::vector<double> convex_crossover(std::span<const double> x, std::span<const double> y);

/// Adds N(0, sigma) to every component, then clamps to the domain.
std::vector<double> gaussian_mutation(std::span<const double> x, double sigma, const RealDomain& domain, Rng& rng);

void clamp_to(const RealDomain& domain, std::span<double> x);

std::vector<double> random_individual(const RealDomain& domain, Rng& rng);

class RealProblem {
public:
    using Individual = std::vector<double>;

    explicit RealProblem(FunctionId fid, RealDomain domain, double sigma = 0.01, F5Form f5 = F5Form::Printed);
    explicit RealProblem(FunctionId fid, std::size_t n = 5, double sigma = 0.01)
        : RealProblem(fid, default_domain(fid, n), sigma)
    {
    }

    Individual random_individual(Rng& rng) const { return realopt::random_individual(domain_, rng); }
    double evaluate(const Individual& x) const;
    Individual crossover(const Individual& a, const Individual& b, Rng&) const { return convex_crossover(a, b); }
    Individual mutate(const Individual& x, Rng& rng) const { return gaussian_mutation(x, sigma_, domain_, rng); }

    [[nodiscard]] FunctionId function() const noexcept { return fid_; }
    [[nodiscard]] const RealDomain& domain() const noexcept { return domain_; }
    [[nodiscard]] double sigma() const noexcept { return sigma_; }
    [[nodiscard]] std::string name() const { return to_string(fid_); }

private:
    FunctionId fid_;
    RealDomain domain_;
    double sigma_;
    F5Form f5_;
};

} // namespace eea::realopt
