#include "eea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eea/error.hpp"

namespace eea {

namespace {

double sample_variance(std::span<const double> xs, double mean)
{
    double ss = 0.0;
    for (double x : xs) { ss += (x - mean) * (x - mean); }
    return ss / static_cast<double>(xs.size() - 1);
}

void require_two(std::span<const double> xs)
{
    if (xs.size() < 2) {
        throw InsufficientData("at least 2 samples required, got " + std::to_string(xs.size()));
    }
}

// Lentz's method for the continued fraction of I_x(a, b); valid for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x)
{
    constexpr int kMaxIterations = 1000;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) { d = kTiny; }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) { d = kTiny; }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) { c = kTiny; }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) { d = kTiny; }
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) { c = kTiny; }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) { break; }
    }
    return h;
}

} // namespace

SampleStats summarize(std::span<const double> samples)
{
    require_two(samples);
    double sum = 0.0;
    for (double x : samples) { sum += x; }
    SampleStats s;
    s.count = samples.size();
    s.mean = sum / static_cast<double>(s.count);
    s.stddev = std::sqrt(sample_variance(samples, s.mean));
    return s;
}

double incomplete_beta(double a, double b, double x)
{
    if (!(a > 0.0 && b > 0.0)) {
        throw InvalidInput("incomplete beta needs positive shape parameters");
    }
    if (x <= 0.0) { return 0.0; }
    if (x >= 1.0) { return 1.0; }
    const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_cdf(double f, double d1, double d2)
{
    if (f <= 0.0) { return 0.0; }
    if (std::isinf(f)) { return 1.0; }
    return incomplete_beta(d1 / 2.0, d2 / 2.0, d1 * f / (d1 * f + d2));
}

double t_cdf(double t, double df)
{
    if (std::isinf(t)) { return t > 0 ? 1.0 : 0.0; }
    const double tail = 0.5 * incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
    return t > 0.0 ? 1.0 - tail : tail;
}

double f_test(std::span<const double> a, std::span<const double> b)
{
    const SampleStats sa = summarize(a);
    const SampleStats sb = summarize(b);
    const double va = sa.stddev * sa.stddev;
    const double vb = sb.stddev * sb.stddev;
    if (va == 0.0 || vb == 0.0) {
        throw DegenerateSample("F-test needs nonzero variance in both samples");
    }
    if (va == vb) { return 1.0; }
    double ratio = va / vb;
    double d1 = static_cast<double>(a.size() - 1);
    double d2 = static_cast<double>(b.size() - 1);
    if (ratio < 1.0) {
        ratio = 1.0 / ratio;
        std::swap(d1, d2);
    }
    const double upper = 1.0 - f_cdf(ratio, d1, d2);
    return std::clamp(2.0 * upper, 0.0, 1.0);
}

TTestResult t_test_detail(std::span<const double> a, std::span<const double> b, bool equal_variance, Tail tail)
{
    const SampleStats sa = summarize(a);
    const SampleStats sb = summarize(b);
    const double na = static_cast<double>(sa.count);
    const double nb = static_cast<double>(sb.count);
    const double va = sa.stddev * sa.stddev;
    const double vb = sb.stddev * sb.stddev;
    const double diff = sa.mean - sb.mean;

    TTestResult r;
    double se2 = 0.0;
    if (equal_variance) {
        r.df = na + nb - 2.0;
        const double pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / r.df;
        se2 = pooled * (1.0 / na + 1.0 / nb);
    } else {
        const double qa = va / na;
        const double qb = vb / nb;
        se2 = qa + qb;
        const double denom = qa * qa / (na - 1.0) + qb * qb / (nb - 1.0);
        r.df = denom > 0.0 ? se2 * se2 / denom : na + nb - 2.0;
    }

    if (se2 == 0.0) {
        if (diff != 0.0) {
            throw DegenerateSample("t-test with zero variance in both samples and different means");
        }
        r.statistic = 0.0;
        r.p = tail == Tail::Two ? 1.0 : 0.5;
        return r;
    }

    r.statistic = diff / std::sqrt(se2);
    if (tail == Tail::Two) {
        r.p = std::clamp(2.0 * t_cdf(-std::fabs(r.statistic), r.df), 0.0, 1.0);
    } else {
        r.p = t_cdf(r.statistic, r.df);
    }
    return r;
}

double t_test(std::span<const double> a, std::span<const double> b, bool equal_variance)
{
    return t_test_detail(a, b, equal_variance, Tail::Two).p;
}

TTestResult compare_means(std::span<const double> a, std::span<const double> b, Tail tail)
{
    return t_test_detail(a, b, f_test(a, b) >= kEqualVarianceThreshold, tail);
}

} // namespace eea
