#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "eea/error.hpp"
#include "eea/permutation.hpp"
#include "eea/qap.hpp"

using namespace eea;
using namespace eea::qap;

namespace {

const std::string kData = EEA_TEST_DATA;

QapInstance random_instance(std::size_t n, Rng& rng)
{
    std::vector<double> a(n * n);
    std::vector<double> b(n * n);
    for (auto& v : a) { v = static_cast<double>(rng.index(10)); }
    for (auto& v : b) { v = static_cast<double>(rng.index(10)); }
    return QapInstance("random", n, a, b);
}

// Cost written against the raw matrices with the facility-at-location convention.
double oracle_cost(const std::vector<double>& a, const std::vector<double>& b, std::size_t n, const std::vector<int>& perm)
{
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) { c += a[i * n + j] * b[perm[i] * n + perm[j]]; }
    }
    return c;
}

Assignment identity(std::size_t n)
{
    Assignment p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

std::size_t hamming(const Assignment& x, const Assignment& y)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) { d += x[i] == y[i] ? 0 : 1; }
    return d;
}

} // namespace

TEST_CASE("parse handcrafted document")
{
    const QapInstance q = parse_qaplib("3\n\n0 1 2\n1 0 3\n2 3 0\n\n0 5 2\n5 0 3\n2 3 0\n", "tiny");
    CHECK(q.size() == 3);
    CHECK(q.name() == "tiny");
    CHECK(q.a(1, 2) == 3.0);
    CHECK(q.b(0, 1) == 5.0);
    CHECK(qap_cost(q, identity(3)) == 2 * (1 * 5 + 2 * 2 + 3 * 3));
}

TEST_CASE("parse errors")
{
    try {
        parse_qaplib("3\n0 1 2\n1 0 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("19") != std::string::npos);
        CHECK(what.find("7") != std::string::npos);
        CHECK(e.line() == 3);
    }
    try {
        parse_qaplib("1\n5\n6\n7\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_qaplib(""), ParseError);
    CHECK_THROWS_AS(parse_qaplib("2\n0 1\n1 0\n0 x\n1 0\n"), ParseError);
    try {
        parse_qaplib("2\n0 1\n1 0\n0 x\n1 0\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_qaplib("2.5\n"), ParseError);
    CHECK_THROWS_AS(load_qaplib(kData + "/missing.dat"), std::runtime_error);
}

TEST_CASE("public fixture")
{
    const QapInstance q = load_qaplib(kData + "/chr12c.dat");
    CHECK(q.name() == "chr12c");
    CHECK(q.size() == 12);
    // published optimum and its permutation (facility at each location)
    const Assignment opt { 6, 4, 0, 2, 9, 3, 7, 5, 8, 10, 1, 11 };
    CHECK(qap_cost(q, opt) == 11156.0);
}

TEST_CASE("cost")
{
    const QapInstance zero_flow("z", 3, { 0, 1, 2, 1, 0, 3, 2, 3, 0 }, std::vector<double>(9, 0.0));
    Rng rng(2);
    for (int t = 0; t < 10; ++t) { CHECK(qap_cost(zero_flow, random_assignment(3, rng)) == 0.0); }

    const QapInstance two("two", 2, { 0, 1, 1, 0 }, { 0, 3, 3, 0 });
    CHECK(qap_cost(two, Assignment { 0, 1 }) == 6.0);
    CHECK(qap_cost(two, Assignment { 1, 0 }) == 6.0);

    CHECK_THROWS_AS(qap_cost(two, Assignment { 0, 0 }), InvalidIndividual);
    CHECK_THROWS_AS(qap_cost(two, Assignment { 0 }), InvalidIndividual);
    CHECK_THROWS_AS(QapInstance("bad", 2, { 0, 1, 1 }, { 0, 1, 1, 0 }), InvalidInput);
}

TEST_CASE("cost agrees with a double-loop oracle")
{
    Rng rng(19);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.index(15);
        std::vector<double> a(n * n);
        std::vector<double> b(n * n);
        for (auto& v : a) { v = rng.uniform(-5.0, 50.0); }
        for (auto& v : b) { v = rng.uniform(-5.0, 50.0); }
        const QapInstance q("r", n, a, b);
        const Assignment p = random_assignment(n, rng);
        CHECK(qap_cost(q, p) == doctest::Approx(oracle_cost(a, b, n, p)).epsilon(1e-12));
    }
}

TEST_CASE("swap mutation")
{
    Rng rng(5);
    CHECK(swap_mutation(Assignment { 0, 1 }, rng) == Assignment { 1, 0 });
    CHECK(swap_mutation(Assignment { 1, 0 }, rng) == Assignment { 0, 1 });
    CHECK_THROWS_AS(swap_mutation(Assignment { 0 }, rng), InvalidConfiguration);

    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 2 + rng.index(20);
        const Assignment p = random_assignment(n, rng);
        const Assignment m = swap_mutation(p, rng);
        CHECK(is_permutation_of(m, n));
        CHECK(hamming(p, m) == 2);
        const std::size_t i = rng.index(n);
        const std::size_t j = rng.index(n);
        CHECK(swap_positions(swap_positions(p, i, j), i, j) == p);
    }
}

TEST_CASE("dpx keeps agreeing positions")
{
    Rng rng(8);
    const Assignment same = random_assignment(9, rng);
    CHECK(qap_dpx_crossover(same, same, rng) == same);

    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng.index(20);
        const Assignment a = random_assignment(n, rng);
        Assignment b = rng.bernoulli(0.5) || n < 2 ? random_assignment(n, rng) : swap_mutation(a, rng);
        const Assignment c = qap_dpx_crossover(a, b, rng);
        REQUIRE(is_permutation_of(c, n));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == b[i]) { CHECK(c[i] == a[i]); }
        }
    }
}

TEST_CASE("random assignment is uniform")
{
    Rng rng(31);
    CHECK(random_assignment(1, rng) == Assignment { 0 });
    CHECK_THROWS_AS(random_assignment(0, rng), InvalidConfiguration);

    // multinomial: each of 6 cells has sd sqrt(60000 * 1/6 * 5/6) ~ 91.3
    constexpr int kDraws = 60000;
    const double sigma = std::sqrt(kDraws * (1.0 / 6.0) * (5.0 / 6.0));
    std::map<Assignment, int> counts;
    for (int t = 0; t < kDraws; ++t) { ++counts[random_assignment(3, rng)]; }
    CHECK(counts.size() == 6);
    for (const auto& [perm, c] : counts) { CHECK(std::fabs(c - kDraws / 6.0) <= 3.0 * sigma); }
}

TEST_CASE("brute-force minimum agrees with an independent enumeration")
{
    Rng rng(40);
    for (std::size_t n = 4; n <= 6; ++n) {
        const QapInstance q = random_instance(n, rng);
        std::vector<double> a(n * n);
        std::vector<double> b(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[i * n + j] = q.a(i, j);
                b[i * n + j] = q.b(i, j);
            }
        }
        Assignment p = identity(n);
        double best = INFINITY;
        double oracle_best = INFINITY;
        do {
            best = std::min(best, qap_cost(q, p));
            oracle_best = std::min(oracle_best, oracle_cost(a, b, n, p));
        } while (std::next_permutation(p.begin(), p.end()));
        CHECK(best == oracle_best);

        // any operator output is bounded below by the optimum
        const QapProblem prob(q);
        for (int t = 0; t < 50; ++t) {
            const Assignment x = prob.random_individual(rng);
            CHECK(prob.evaluate(prob.mutate(x, rng)) >= best);
            CHECK(prob.evaluate(prob.crossover(x, prob.random_individual(rng), rng)) >= best);
        }
    }
}
