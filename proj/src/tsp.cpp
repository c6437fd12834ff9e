#include "eea/tsp.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <tuple>

#include "eea/error.hpp"
#include "eea/permutation.hpp"

namespace eea::tsp {

namespace {

// Above this many cities distances are computed on demand.
constexpr std::size_t kMatrixLimit = 4096;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) { s.remove_prefix(1); }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) { s.remove_suffix(1); }
    return s;
}

int nint(double v)
{
    return static_cast<int>(v + 0.5);
}

template <typename T>
std::optional<T> to_number(std::string_view token)
{
    T value {};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc {} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) { ++i; }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) { ++i; }
        if (i > start) { tokens.push_back(line.substr(start, i - start)); }
    }
    return tokens;
}

} // namespace

int compute_distance(EdgeWeightType type, Point a, Point b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    switch (type) {
    case EdgeWeightType::Euc2D:
        return nint(std::sqrt(dx * dx + dy * dy));
    case EdgeWeightType::Att: {
        // pseudo-Euclidean: round up whenever nint rounded down
        const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
        const int t = nint(r);
        return t < r ? t + 1 : t;
    }
    }
    return 0;
}

TspInstance::TspInstance(std::string name, EdgeWeightType type, std::vector<Point> coords)
    : name_(std::move(name))
    , type_(type)
    , coords_(std::move(coords))
{
    if (coords_.size() < 3) {
        throw InvalidInput("a TSP instance needs at least 3 cities, got " + std::to_string(coords_.size()));
    }
    const std::size_t n = coords_.size();
    if (n <= kMatrixLimit) {
        matrix_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            matrix_[i * n + i] = 0;
            for (std::size_t j = i + 1; j < n; ++j) {
                const int d = compute_distance(type_, coords_[i], coords_[j]);
                matrix_[i * n + j] = d;
                matrix_[j * n + i] = d;
            }
        }
    }
}

int TspInstance::distance(std::size_t i, std::size_t j) const
{
    if (i >= size() || j >= size()) {
        throw InvalidInput("city index out of range for " + name_);
    }
    return distance_unchecked(i, j);
}

TspInstance parse_tsplib(std::string_view text)
{
    std::string name;
    std::optional<std::size_t> dimension;
    std::optional<EdgeWeightType> type;
    std::size_t dimension_line = 0;
    std::vector<Point> coords;
    std::vector<char> seen;
    bool in_coords = false;
    bool have_coords = false;

    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos < text.size();) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) { end = text.size(); }
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 1;
    }

    std::size_t line_no = 0;
    for (const std::string_view raw : lines) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) { continue; }
        if (line == "EOF") { break; }

        if (in_coords) {
            const auto tokens = split_ws(line);
            if (std::isalpha(static_cast<unsigned char>(tokens[0][0]))) {
                in_coords = false; // a keyword ends the section
            } else {
                const auto index = tokens.size() == 3 ? to_number<std::size_t>(tokens[0]) : std::nullopt;
                const auto x = tokens.size() == 3 ? to_number<double>(tokens[1]) : std::nullopt;
                const auto y = tokens.size() == 3 ? to_number<double>(tokens[2]) : std::nullopt;
                if (!index || !x || !y) {
                    throw ParseError(line_no, "NODE_COORD_SECTION: expected 'index x y'");
                }
                if (*index < 1 || *index > coords.size() || seen[*index - 1]) {
                    throw ParseError(line_no, "NODE_COORD_SECTION: node index " + std::string(tokens[0])
                                                  + " out of range or repeated");
                }
                coords[*index - 1] = Point { *x, *y };
                seen[*index - 1] = 1;
                continue;
            }
        }

        std::string_view key = line;
        std::string_view value;
        if (const auto colon = line.find(':'); colon != std::string_view::npos) {
            key = trim(line.substr(0, colon));
            value = trim(line.substr(colon + 1));
        } else if (const auto space = line.find_first_of(" \t"); space != std::string_view::npos) {
            key = trim(line.substr(0, space));
            value = trim(line.substr(space + 1));
        }

        if (key == "NAME") {
            name = std::string(value);
        } else if (key == "TYPE") {
            if (value != "TSP") {
                throw ParseError(line_no, "TYPE: unsupported problem type '" + std::string(value) + "'");
            }
        } else if (key == "DIMENSION") {
            dimension = to_number<std::size_t>(value);
            if (!dimension || *dimension < 3) {
                throw ParseError(line_no, "DIMENSION: expected an integer >= 3, got '" + std::string(value) + "'");
            }
            dimension_line = line_no;
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "EUC_2D") {
                type = EdgeWeightType::Euc2D;
            } else if (value == "ATT") {
                type = EdgeWeightType::Att;
            } else {
                throw ParseError(line_no, "EDGE_WEIGHT_TYPE: unsupported value '" + std::string(value) + "'");
            }
        } else if (key == "NODE_COORD_SECTION") {
            if (!dimension) {
                throw ParseError(line_no, "NODE_COORD_SECTION: DIMENSION must precede the coordinates");
            }
            coords.assign(*dimension, Point {});
            seen.assign(*dimension, 0);
            in_coords = true;
            have_coords = true;
        } else if (key.ends_with("_SECTION")) {
            throw ParseError(line_no, std::string(key) + ": unsupported section");
        }
        // other header keywords (COMMENT, DISPLAY_DATA_TYPE, ...) are ignored
    }

    if (!dimension) {
        throw ParseError(line_no, "DIMENSION: missing keyword");
    }
    if (!type) {
        throw ParseError(line_no, "EDGE_WEIGHT_TYPE: missing keyword");
    }
    if (!have_coords) {
        throw ParseError(line_no, "NODE_COORD_SECTION: missing section");
    }
    const auto present = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
    if (present != *dimension) {
        throw ParseError(line_no, "NODE_COORD_SECTION: " + std::to_string(present) + " coordinates for DIMENSION "
                                      + std::to_string(*dimension) + " (line " + std::to_string(dimension_line) + ")");
    }
    return TspInstance(name, *type, std::move(coords));
}

TspInstance load_tsplib(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        auto instance = parse_tsplib(buffer.str());
        if (instance.name().empty()) {
            return TspInstance(path.stem().string(), instance.edge_weight_type(), instance.coords());
        }
        return instance;
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

std::int64_t tour_length(const TspInstance& instance, std::span<const int> tour)
{
    require_permutation(tour, instance.size());
    std::int64_t total = 0;
    const std::size_t n = tour.size();
    for (std::size_t k = 0; k < n; ++k) {
        total += instance.distance_unchecked(static_cast<std::size_t>(tour[k]), static_cast<std::size_t>(tour[(k + 1) % n]));
    }
    return total;
}

Tour nearest_neighbor_tour(const TspInstance& instance, std::size_t start)
{
    const std::size_t n = instance.size();
    if (start >= n) {
        throw InvalidInput("start city out of range");
    }
    std::vector<char> visited(n, 0);
    Tour tour;
    tour.reserve(n);
    std::size_t current = start;
    visited[current] = 1;
    tour.push_back(static_cast<int>(current));
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t next = n;
        int best = std::numeric_limits<int>::max();
        for (std::size_t c = 0; c < n; ++c) {
            if (visited[c]) { continue; }
            const int d = instance.distance_unchecked(current, c);
            if (d < best) {
                best = d;
                next = c;
            }
        }
        visited[next] = 1;
        tour.push_back(static_cast<int>(next));
        current = next;
    }
    return tour;
}

std::vector<std::pair<int, int>> tour_edges(std::span<const int> tour)
{
    std::vector<std::pair<int, int>> edges;
    edges.reserve(tour.size());
    for (std::size_t k = 0; k < tour.size(); ++k) {
        const int a = tour[k];
        const int b = tour[(k + 1) % tour.size()];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

Tour dpx_crossover(std::span<const int> p1, std::span<const int> p2, const TspInstance& instance, Rng& rng)
{
    const std::size_t n = instance.size();
    require_permutation(p1, n);
    require_permutation(p2, n);

    auto neighbours = [n](std::span<const int> tour) {
        std::vector<std::array<int, 2>> adj(n);
        for (std::size_t k = 0; k < n; ++k) {
            adj[static_cast<std::size_t>(tour[k])] = { tour[(k + n - 1) % n], tour[(k + 1) % n] };
        }
        return adj;
    };
    const auto adj1 = neighbours(p1);
    const auto adj2 = neighbours(p2);
    auto in_tour = [](const std::vector<std::array<int, 2>>& adj, int a, int b) {
        const auto& nb = adj[static_cast<std::size_t>(a)];
        return nb[0] == b || nb[1] == b;
    };
    auto common = [&](int a, int b) { return in_tour(adj2, a, b); }; // every p1 edge is in p1

    // rotate p1 so that it starts right after a non-common edge
    std::size_t start = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (!common(p1[(k + n - 1) % n], p1[k])) {
            start = k;
            break;
        }
    }
    if (start == n) {
        return Tour(p1.begin(), p1.end());
    }

    std::vector<std::vector<int>> fragments;
    for (std::size_t step = 0; step < n; ++step) {
        const int city = p1[(start + step) % n];
        if (step == 0 || !common(fragments.back().back(), city)) {
            fragments.emplace_back();
        }
        fragments.back().push_back(city);
    }

    const std::size_t count = fragments.size();
    std::vector<char> used(count, 0);
    Tour child;
    child.reserve(n);

    const std::size_t first = rng.index(count);
    used[first] = 1;
    child.insert(child.end(), fragments[first].begin(), fragments[first].end());

    for (std::size_t placed = 1; placed < count; ++placed) {
        const int tail = child.back();
        // (parent edge?, distance, city) ordered lexicographically
        std::tuple<bool, int, int> best { true, std::numeric_limits<int>::max(), std::numeric_limits<int>::max() };
        std::size_t best_fragment = count;
        bool best_reversed = false;

        for (std::size_t f = 0; f < count; ++f) {
            if (used[f]) { continue; }
            const auto& frag = fragments[f];
            for (int end = 0; end < (frag.size() > 1 ? 2 : 1); ++end) {
                const int city = end == 0 ? frag.front() : frag.back();
                const bool parent_edge = in_tour(adj1, tail, city) || in_tour(adj2, tail, city);
                const std::tuple<bool, int, int> key {
                    parent_edge, instance.distance_unchecked(static_cast<std::size_t>(tail), static_cast<std::size_t>(city)), city
                };
                if (key < best) {
                    best = key;
                    best_fragment = f;
                    best_reversed = end == 1;
                }
            }
        }

        used[best_fragment] = 1;
        const auto& frag = fragments[best_fragment];
        if (best_reversed) {
            child.insert(child.end(), frag.rbegin(), frag.rend());
        } else {
            child.insert(child.end(), frag.begin(), frag.end());
        }
    }
    return child;
}

Tour two_exchange_at(std::span<const int> tour, std::size_t i, std::size_t j)
{
    const std::size_t n = tour.size();
    if (n < 4) {
        throw InvalidConfiguration("2-exchange needs at least 4 cities");
    }
    if (!(i < j && j < n) || j == i + 1 || (i == 0 && j == n - 1)) {
        throw InvalidInput("2-exchange needs two distinct non-adjacent edges");
    }
    Tour out(tour.begin(), tour.end());
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(i + 1), out.begin() + static_cast<std::ptrdiff_t>(j + 1));
    return out;
}

Tour two_exchange(std::span<const int> tour, Rng& rng)
{
    const std::size_t n = tour.size();
    if (n < 4) {
        throw InvalidConfiguration("2-exchange needs at least 4 cities");
    }
    // rejection sampling keeps the pair uniform over the n(n-3)/2 valid ones
    for (;;) {
        std::size_t i = rng.index(n);
        std::size_t j = rng.index(n);
        if (i > j) { std::swap(i, j); }
        if (j - i >= 2 && !(i == 0 && j == n - 1)) {
            return two_exchange_at(tour, i, j);
        }
    }
}

TspProblem::TspProblem(TspInstance instance)
    : instance_(std::move(instance))
{
}

TspProblem::Individual TspProblem::random_individual(Rng& rng) const
{
    return nearest_neighbor_tour(instance_, rng.index(instance_.size()));
}

} // namespace eea::tsp
