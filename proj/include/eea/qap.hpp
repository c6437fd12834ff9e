#pragma once

// Quadratic assignment: QAPLIB ingestion, C(p) = sum_ij a_ij * b_p(i)p(j),
// swap mutation and an assignment-preserving DPX.

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eea/rng.hpp"

namespace eea::qap {

class QapInstance {
public:
    /// a and b are n*n, row-major. a is indexed by locations, b by facilities.
    QapInstance(std::string name, std::size_t n, std::vector<double> a, std::vector<double> b);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double a(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
    [[nodiscard]] double b(std::size_t i, std::size_t j) const noexcept { return b_[i * n_ + j]; }

private:
    std::string name_;
    std::size_t n_;
    std::vector<double> a_;
    std::vector<double> b_;
};

/// Whitespace-separated: n, then n*n entries of A, then n*n entries of B.
/// A wrong token count is reported at the first surplus token or at the
/// last token of a short document.
QapInstance parse_qaplib(std::string_view text, std::string name = {});
QapInstance load_qaplib(const std::filesystem::path& path);

/// perm[i] is the facility placed at location i.
using Assignment = std::vector<int>;

double qap_cost(const QapInstance& instance, std::span<const int> perm);

Assignment swap_positions(std::span<const int> perm, std::size_t i, std::size_t j);

/// Exchanges the facilities at two distinct uniformly drawn locations.
Assignment swap_mutation(std::span<const int> perm, Rng& rng);

/// Keeps the locations where both parents agree; the remaining facilities
/// are shuffled uniformly into the remaining locations.
Assignment qap_dpx_crossover(std::span<const int> p1, std::span<const int> p2, Rng& rng);

/// Uniform random permutation (Fisher-Yates).
Assignment random_assignment(std::size_t n, Rng& rng);

class QapProblem {
public:
    using Individual = Assignment;

    explicit QapProblem(QapInstance instance) : instance_(std::move(instance)) { }

    Individual random_individual(Rng& rng) const { return random_assignment(instance_.size(), rng); }
    double evaluate(const Individual& perm) const { return qap_cost(instance_, perm); }
    Individual crossover(const Individual& a, const Individual& b, Rng& rng) const { return qap_dpx_crossover(a, b, rng); }
    Individual mutate(const Individual& perm, Rng& rng) const { return swap_mutation(perm, rng); }

    [[nodiscard]] const QapInstance& instance() const noexcept { return instance_; }
    [[nodiscard]] const std::string& name() const noexcept { return instance_.name(); }

private:
    QapInstance instance_;
};

} // namespace eea::qap
