#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eea/error.hpp"
#include "eea/realopt.hpp"

using namespace eea;
using namespace eea::realopt;

namespace {

constexpr FunctionId kAll[] = { FunctionId::F1, FunctionId::F2, FunctionId::F3, FunctionId::F4, FunctionId::F5,
                                FunctionId::F6, FunctionId::F7, FunctionId::F8, FunctionId::F9, FunctionId::F10 };

// Second, loop-for-loop transcription of the tabulated formulas.
double oracle(FunctionId fid, const std::vector<double>& x)
{
    const std::size_t n = x.size();
    double acc = 0.0;
    switch (fid) {
    case FunctionId::F1:
        for (std::size_t i = 1; i <= n; ++i) { acc += static_cast<double>(i) * std::pow(x[i - 1], 2); }
        return acc;
    case FunctionId::F2:
        for (double v : x) { acc += std::pow(v, 2); }
        return acc;
    case FunctionId::F3: {
        double prod = 1.0;
        for (double v : x) {
            acc += std::abs(v);
            prod *= std::abs(v);
        }
        return acc + prod;
    }
    case FunctionId::F4:
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= i; ++j) { acc += std::pow(x[j - 1], 2); }
        }
        return acc;
    case FunctionId::F5:
        return *std::max_element(x.begin(), x.end());
    case FunctionId::F6:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            acc += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
        }
        return acc;
    case FunctionId::F7:
        acc = 10.0 * static_cast<double>(n);
        for (double v : x) { acc += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v); }
        return acc;
    case FunctionId::F8: {
        const double a = 20.0;
        const double b = 0.2;
        const double c = 2.0 * std::numbers::pi;
        double sq = 0.0;
        double cs = 0.0;
        for (double v : x) {
            sq += v * v;
            cs += std::cos(c * v);
        }
        const auto dn = static_cast<double>(n);
        return -a * std::exp(-b * std::sqrt(sq / dn)) - std::exp(cs / dn) + a + std::exp(1.0);
    }
    case FunctionId::F9: {
        double prod = 1.0;
        for (std::size_t i = 1; i <= n; ++i) {
            acc += x[i - 1] * x[i - 1];
            prod *= std::cos(x[i - 1] / std::sqrt(static_cast<double>(i)));
        }
        return acc / 4000.0 - prod + 1.0;
    }
    case FunctionId::F10:
        for (double v : x) { acc += -v * std::sin(std::sqrt(std::abs(v))); }
        return acc;
    }
    return NAN;
}

} // namespace

TEST_CASE("function ids")
{
    CHECK(parse_function_id("f1") == FunctionId::F1);
    CHECK(parse_function_id("F10") == FunctionId::F10);
    CHECK(to_string(FunctionId::F7) == "f7");
    CHECK_THROWS_AS(parse_function_id("f11"), InvalidInput);
    CHECK_THROWS_AS(parse_function_id("f0"), InvalidInput);
    CHECK_THROWS_AS(parse_function_id("g1"), InvalidInput);
}

TEST_CASE("minimizers")
{
    const std::vector<double> zero(5, 0.0);
    for (FunctionId fid : { FunctionId::F1, FunctionId::F2, FunctionId::F3, FunctionId::F4, FunctionId::F5,
                            FunctionId::F7, FunctionId::F8, FunctionId::F9 }) {
        CAPTURE(to_string(fid));
        CHECK(std::fabs(evaluate(fid, zero)) <= 1e-9);
    }
    CHECK(std::fabs(evaluate(FunctionId::F6, std::vector<double>(5, 1.0))) <= 1e-9);
    const double f10 = evaluate(FunctionId::F10, std::vector<double>(5, 420.9687));
    CHECK(std::fabs(f10 - known_minimum(FunctionId::F10, 5)) <= 0.5);
    CHECK(known_minimum(FunctionId::F10, 5) == doctest::Approx(-2094.9));
}

TEST_CASE("f1 weights are 1-based")
{
    CHECK(evaluate(FunctionId::F1, std::vector<double> { 1, 2, 3, 4, 5 }) == 225.0);
}

TEST_CASE("f5 forms")
{
    const std::vector<double> x { -3.0, 1.0, -7.0 };
    CHECK(evaluate(FunctionId::F5, x) == 1.0);
    CHECK(evaluate(FunctionId::F5, x, F5Form::Absolute) == 7.0);
    CHECK(evaluate(FunctionId::F5, std::vector<double>(5, -100.0)) == -100.0);
}

TEST_CASE("evaluate agrees with the transcribed formulas")
{
    Rng rng(2024);
    for (FunctionId fid : kAll) {
        const RealDomain d = default_domain(fid, 1 + rng.index(8));
        for (int t = 0; t < 200; ++t) {
            const auto x = random_individual(d, rng);
            CAPTURE(to_string(fid));
            CHECK(evaluate(fid, x) == doctest::Approx(oracle(fid, x)).epsilon(1e-12));
        }
    }
}

TEST_CASE("symmetric functions ignore component order")
{
    Rng rng(5);
    for (FunctionId fid : { FunctionId::F2, FunctionId::F3, FunctionId::F5, FunctionId::F7, FunctionId::F8,
                            FunctionId::F10 }) {
        const RealDomain d = default_domain(fid, 6);
        for (int t = 0; t < 100; ++t) {
            auto x = random_individual(d, rng);
            const double before = evaluate(fid, x);
            for (std::size_t k = x.size(); k > 1; --k) { std::swap(x[k - 1], x[rng.index(k)]); }
            CAPTURE(to_string(fid));
            CHECK(evaluate(fid, x) == doctest::Approx(before).epsilon(1e-12));
        }
    }
}

TEST_CASE("domains")
{
    CHECK(default_domain(FunctionId::F1).min_x == -10.0);
    CHECK(default_domain(FunctionId::F1).max_x == 10.0);
    CHECK(default_domain(FunctionId::F1).n == 5);
    CHECK(default_domain(FunctionId::F2).max_x == 100.0);
    CHECK(default_domain(FunctionId::F6).max_x == 30.0);
    CHECK(default_domain(FunctionId::F7).max_x == 5.0);
    CHECK(default_domain(FunctionId::F8).max_x == 32.0);
    CHECK(default_domain(FunctionId::F10).min_x == -500.0);
    CHECK_THROWS_AS((RealDomain { 1.0, 1.0, 5 }.validate()), InvalidConfiguration);
    CHECK_THROWS_AS((RealDomain { -1.0, 1.0, 0 }.validate()), InvalidConfiguration);
    Rng rng(1);
    CHECK_THROWS_AS(random_individual(RealDomain { 2.0, 2.0, 3 }, rng), InvalidConfiguration);
}

TEST_CASE("random_individual stays in bounds")
{
    Rng rng(3);
    const RealDomain d = default_domain(FunctionId::F1, 5);
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_individual(d, rng);
        REQUIRE(x.size() == 5);
        CHECK(std::all_of(x.begin(), x.end(), [](double v) { return v >= -10.0 && v <= 10.0; }));
    }
}

TEST_CASE("convex crossover")
{
    const std::vector<double> x { 0.0, 0.0 };
    const std::vector<double> y { 2.0, 4.0 };
    CHECK(convex_crossover(x, y) == std::vector<double> { 1.0, 2.0 });
    CHECK(convex_crossover(y, y) == y);
    CHECK_THROWS_AS(convex_crossover(x, std::vector<double> { 1.0 }), InvalidInput);

    Rng rng(8);
    const RealDomain d = default_domain(FunctionId::F9, 7);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_individual(d, rng);
        const auto b = random_individual(d, rng);
        const auto c = convex_crossover(a, b);
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c[i] >= std::min(a[i], b[i]));
            CHECK(c[i] <= std::max(a[i], b[i]));
        }
    }
}

TEST_CASE("gaussian mutation")
{
    Rng rng(13);
    const RealDomain d = default_domain(FunctionId::F1, 3);
    const std::vector<double> x { 1.0, -2.0, 3.0 };
    CHECK(gaussian_mutation(x, 0.0, d, rng) == x);
    CHECK_THROWS_AS(gaussian_mutation(x, -1.0, d, rng), InvalidConfiguration);

    // at the upper bound, positive noise is clamped away
    const std::vector<double> top { 10.0 };
    const RealDomain d1 { -10.0, 10.0, 1 };
    int at_bound = 0;
    for (int t = 0; t < 1000; ++t) {
        const double v = gaussian_mutation(top, 0.5, d1, rng)[0];
        CHECK(v <= 10.0);
        at_bound += v == 10.0 ? 1 : 0;
    }
    CHECK(at_bound > 400);
    CHECK(at_bound < 600);

    for (int t = 0; t < 1000; ++t) {
        const auto m = gaussian_mutation(random_individual(d, rng), 5.0, d, rng);
        CHECK(std::all_of(m.begin(), m.end(), [](double v) { return v >= -10.0 && v <= 10.0; }));
    }
}

TEST_CASE("gaussian mutation noise has the requested spread")
{
    // sample sd of 1e5 normals has relative sd 1/sqrt(2e5) ~ 0.0022, so 5% is > 20 sigma
    Rng rng(99);
    const RealDomain d { -10.0, 10.0, 1 };
    const std::vector<double> x { 0.0 };
    constexpr int kSamples = 100000;
    double sum = 0.0;
    double sq = 0.0;
    for (int t = 0; t < kSamples; ++t) {
        const double v = gaussian_mutation(x, 0.01, d, rng)[0];
        sum += v;
        sq += v * v;
    }
    const double mean = sum / kSamples;
    const double sd = std::sqrt((sq - kSamples * mean * mean) / (kSamples - 1));
    CHECK(std::fabs(sd - 0.01) <= 0.05 * 0.01);
}

TEST_CASE("RealProblem")
{
    const RealProblem p(FunctionId::F1);
    CHECK(p.name() == "f1");
    CHECK(p.sigma() == 0.01);
    CHECK(p.evaluate(std::vector<double>(5, 0.0)) == 0.0);
    CHECK_THROWS_AS(p.evaluate(std::vector<double>(4, 0.0)), InvalidInput);

    const RealProblem abs5(FunctionId::F5, default_domain(FunctionId::F5), 0.01, F5Form::Absolute);
    CHECK(abs5.evaluate(std::vector<double> { -9, 0, 0, 0, 1 }) == 9.0);
}
