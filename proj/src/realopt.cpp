#include "eea/realopt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "eea/error.hpp"

namespace eea::realopt {

namespace {

constexpr double kAckleyA = 20.0;
constexpr double kAckleyB = 0.2;
constexpr double kAckleyC = 2.0 * std::numbers::pi;

double sum_squares(std::span<const double> x)
{
    double s = 0.0;
    for (double v : x) { s += v * v; }
    return s;
}

} // namespace

FunctionId parse_function_id(std::string_view token)
{
    if (token.size() >= 2 && (token[0] == 'f' || token[0] == 'F')) {
        int id = 0;
        for (char c : token.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                id = 0;
                break;
            }
            id = id * 10 + (c - '0');
            if (id > kFunctionCount) { break; }
        }
        if (id >= 1 && id <= kFunctionCount) {
            return static_cast<FunctionId>(id);
        }
    }
    throw InvalidInput("unknown test function '" + std::string(token) + "' (expected f1..f10)");
}

std::string to_string(FunctionId fid)
{
    return "f" + std::to_string(static_cast<int>(fid));
}

void RealDomain::validate() const
{
    if (!(min_x < max_x)) {
        throw InvalidConfiguration("domain needs min_x < max_x");
    }
    if (n < 1) {
        throw InvalidConfiguration("domain dimension must be at least 1");
    }
}

RealDomain default_domain(FunctionId fid, std::size_t n)
{
    double bound = 0.0;
    switch (fid) {
    case FunctionId::F1:
    case FunctionId::F3: bound = 10.0; break;
    case FunctionId::F2:
    case FunctionId::F4:
    case FunctionId::F5: bound = 100.0; break;
    case FunctionId::F6: bound = 30.0; break;
    case FunctionId::F7: bound = 5.0; break;
    case FunctionId::F8: bound = 32.0; break;
    case FunctionId::F9:
    case FunctionId::F10: bound = 500.0; break;
    }
    return RealDomain { -bound, bound, n };
}

double known_minimum(FunctionId fid, std::size_t n)
{
    return fid == FunctionId::F10 ? -static_cast<double>(n) * 418.98 : 0.0;
}

double evaluate(FunctionId fid, std::span<const double> x, F5Form f5)
{
    if (x.empty()) {
        throw InvalidInput("cannot evaluate an empty vector");
    }
    const auto n = static_cast<double>(x.size());

    switch (fid) {
    case FunctionId::F1: {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            s += static_cast<double>(i + 1) * x[i] * x[i];
        }
        return s;
    }
    case FunctionId::F2:
        return sum_squares(x);
    case FunctionId::F3: {
        double sum = 0.0;
        double prod = 1.0;
        for (double v : x) {
            sum += std::fabs(v);
            prod *= std::fabs(v);
        }
        return sum + prod;
    }
    case FunctionId::F4: {
        // sum over i of the running sum of x_j^2, j <= i
        double running = 0.0;
        double s = 0.0;
        for (double v : x) {
            running += v * v;
            s += running;
        }
        return s;
    }
    case FunctionId::F5: {
        if (f5 == F5Form::Absolute) {
            double m = 0.0;
            for (double v : x) { m = std::max(m, std::fabs(v)); }
            return m;
        }
        return *std::max_element(x.begin(), x.end());
    }
    case FunctionId::F6: {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            const double b = 1.0 - x[i];
            s += 100.0 * a * a + b * b;
        }
        return s;
    }
    case FunctionId::F7: {
        double s = 10.0 * n;
        for (double v : x) {
            s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
        }
        return s;
    }
    case FunctionId::F8: {
        double cos_sum = 0.0;
        for (double v : x) { cos_sum += std::cos(kAckleyC * v); }
        return -kAckleyA * std::exp(-kAckleyB * std::sqrt(sum_squares(x) / n)) - std::exp(cos_sum / n) + kAckleyA
            + std::numbers::e;
    }
    case FunctionId::F9: {
        double prod = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
        }
        return sum_squares(x) / 4000.0 - prod + 1.0;
    }
    case FunctionId::F10: {
        double s = 0.0;
        for (double v : x) { s -= v * std::sin(std::sqrt(std::fabs(v))); }
        return s;
    }
    }
    throw InvalidInput("unknown function id");
}

std::vector<double> convex_crossover(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size()) {
        throw InvalidInput("convex crossover of vectors with different dimensions");
    }
    std::vector<double> child(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        child[i] = (x[i] + y[i]) / 2.0;
    }
    return child;
}

void clamp_to(const RealDomain& domain, std::span<double> x)
{
    for (double& v : x) {
        v = std::clamp(v, domain.min_x, domain.max_x);
    }
}

std::vector<double> gaussian_mutation(std::span<const double> x, double sigma, const RealDomain& domain, Rng& rng)
{
    if (!(sigma >= 0.0)) {
        throw InvalidConfiguration("mutation sigma must be non-negative");
    }
    std::vector<double> child(x.begin(), x.end());
    if (sigma == 0.0) {
        return child;
    }
    for (double& v : child) {
        v += rng.normal(0.0, sigma);
    }
    clamp_to(domain, child);
    return child;
}

std::vector<double> random_individual(const RealDomain& domain, Rng& rng)
{
    domain.validate();
    std::vector<double> x(domain.n);
    for (double& v : x) {
        v = rng.uniform(domain.min_x, domain.max_x);
    }
    return x;
}

RealProblem::RealProblem(FunctionId fid, RealDomain domain, double sigma, F5Form f5)
    : fid_(fid)
    , domain_(domain)
    , sigma_(sigma)
    , f5_(f5)
{
    domain_.validate();
    if (!(sigma_ >= 0.0)) {
        throw InvalidConfiguration("mutation sigma must be non-negative");
    }
}

double RealProblem::evaluate(const Individual& x) const
{
    if (x.size() != domain_.n) {
        throw InvalidInput("expected a vector of dimension " + std::to_string(domain_.n) + ", got " + std::to_string(x.size()));
    }
    return realopt::evaluate(fid_, x, f5_);
}

} // namespace eea::realopt
