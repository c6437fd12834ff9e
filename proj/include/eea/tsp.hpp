#pragma once

// Symmetric TSP on TSPLIB coordinate instances: integer distances, nearest
// neighbour construction, distance-preserving crossover (DPX) and the 2-exchange
// move.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eea/rng.hpp"

namespace eea::tsp {

enum class EdgeWeightType { Euc2D, Att };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// TSPLIB integer distance between two coordinates.
int compute_distance(EdgeWeightType type, Point a, Point b);

class TspInstance {
public:
    TspInstance(std::string name, EdgeWeightType type, std::vector<Point> coords);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
    [[nodiscard]] EdgeWeightType edge_weight_type() const noexcept { return type_; }
    [[nodiscard]] const std::vector<Point>& coords() const noexcept { return coords_; }

    /// Range-checked; throws InvalidInput for a bad city index.
    [[nodiscard]] int distance(std::size_t i, std::size_t j) const;

    /// Unchecked variant for inner loops.
    [[nodiscard]] int distance_unchecked(std::size_t i, std::size_t j) const noexcept
    {
        if (!matrix_.empty()) { return matrix_[i * coords_.size() + j]; }
        return compute_distance(type_, coords_[i], coords_[j]);
    }

private:
    std::string name_;
    EdgeWeightType type_;
    std::vector<Point> coords_;
    std::vector<int> matrix_;
};

/// Parses the TSPLIB subset NAME / TYPE / COMMENT / DIMENSION /
/// EDGE_WEIGHT_TYPE (EUC_2D, ATT) / NODE_COORD_SECTION / EOF. Errors name the
/// offending keyword and line.
TspInstance parse_tsplib(std::string_view text);
TspInstance load_tsplib(const std::filesystem::path& path);

using Tour = std::vector<int>;

/// Closed tour length; throws InvalidIndividual if `tour` is not a permutation.
std::int64_t tour_length(const TspInstance& instance, std::span<const int> tour);

/// Greedy tour from `start`; ties go to the lowest city index.
Tour nearest_neighbor_tour(const TspInstance& instance, std::size_t start);

/// Copies every edge common to both parents, then joins the resulting
/// fragments greedily: from the current tail, move to the nearest free
/// fragment end whose connecting edge is in neither parent, falling back to
/// parent edges only when no such end is left. The start fragment is drawn
/// from `rng`.
Tour dpx_crossover(std::span<const int> p1, std::span<const int> p2, const TspInstance& instance, Rng& rng);

/// Removes edges (t[i], t[i+1]) and (t[j], t[j+1 mod n]) and reconnects by
/// reversing t[i+1..j]. Requires i < j and the edges to be non-adjacent.
Tour two_exchange_at(std::span<const int> tour, std::size_t i, std::size_t j);

/// two_exchange_at with a uniformly drawn pair of non-adjacent edges. n >= 4.
Tour two_exchange(std::span<const int> tour, Rng& rng);

/// Undirected edge set of a closed tour, each edge as (min, max).
std::vector<std::pair<int, int>> tour_edges(std::span<const int> tour);

class TspProblem {
public:
    using Individual = Tour;

    explicit TspProblem(TspInstance instance);

    /// Nearest neighbour tour from a uniformly drawn start city.
    Individual random_individual(Rng& rng) const;
    double evaluate(const Individual& tour) const { return static_cast<double>(tour_length(instance_, tour)); }
    Individual crossover(const Individual& a, const Individual& b, Rng& rng) const { return dpx_crossover(a, b, instance_, rng); }
    Individual mutate(const Individual& tour, Rng& rng) const { return two_exchange(tour, rng); }

    [[nodiscard]] const TspInstance& instance() const noexcept { return instance_; }
    [[nodiscard]] const std::string& name() const noexcept { return instance_.name(); }

private:
    TspInstance instance_;
};

} // namespace eea::tsp
