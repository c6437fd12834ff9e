#pragma once

#include <cstddef>
#include <span>

namespace eea {

struct SampleStats {
    double mean = 0.0;
    /// Sample standard deviation (n - 1 divisor).
    double stddev = 0.0;
    std::size_t count = 0;
};

/// Throws InsufficientData when fewer than two samples are given.
SampleStats summarize(std::span<const double> samples);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// P(F <= f) for F with (d1, d2) degrees of freedom.
double f_cdf(double f, double d1, double d2);

/// P(T <= t) for Student's t with df degrees of freedom.
double t_cdf(double t, double df);

/// Two-tailed variance-ratio test, larger variance in the numerator.
/// Throws DegenerateSample if either variance is zero.
double f_test(std::span<const double> a, std::span<const double> b);

enum class Tail { Two, Less };

struct TTestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p = 1.0;
};

/// Pooled-variance form when equal_variance, Welch otherwise. Tail::Less
/// tests mean(a) < mean(b).
TTestResult t_test_detail(std::span<const double> a, std::span<const double> b, bool equal_variance,
                          Tail tail = Tail::Two);

/// Two-tailed p-value.
double t_test(std::span<const double> a, std::span<const double> b, bool equal_variance);

/// Pooled form when f_test(a, b) >= 0.05, Welch otherwise.
inline constexpr double kEqualVarianceThreshold = 0.05;
TTestResult compare_means(std::span<const double> a, std::span<const double> b, Tail tail = Tail::Two);

} // namespace eea
