#include "eea/qap.hpp"

#include <charconv>
#include <cctype>
#include <fstream>
#include <sstream>

#include "eea/error.hpp"
#include "eea/permutation.hpp"

namespace eea::qap {

QapInstance::QapInstance(std::string name, std::size_t n, std::vector<double> a, std::vector<double> b)
    : name_(std::move(name))
    , n_(n)
    , a_(std::move(a))
    , b_(std::move(b))
{
    if (n_ == 0 || a_.size() != n_ * n_ || b_.size() != n_ * n_) {
        throw InvalidInput("QAP matrices must both be n x n with n >= 1");
    }
}

QapInstance parse_qaplib(std::string_view text, std::string name)
{
    std::vector<double> values;
    std::vector<std::size_t> lines;
    std::size_t line_no = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line_no;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) { ++i; }
        const std::string_view token = text.substr(start, i - start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc {} || ptr != token.data() + token.size()) {
            throw ParseError(line_no, "not a number: '" + std::string(token) + "'");
        }
        values.push_back(value);
        lines.push_back(line_no);
    }

    if (values.empty()) {
        throw ParseError(0, "empty QAPLIB document");
    }
    const double first = values.front();
    if (first < 1 || first != static_cast<double>(static_cast<std::size_t>(first))) {
        throw ParseError(1, "instance size must be a positive integer");
    }
    const auto n = static_cast<std::size_t>(first);
    const std::size_t expected = 1 + 2 * n * n;
    if (values.size() != expected) {
        // first surplus token, or the last token of a short document
        const std::size_t at = values.size() > expected ? lines[expected] : lines.back();
        throw ParseError(at, "expected " + std::to_string(expected) + " numbers for n = " + std::to_string(n) + ", found "
                                + std::to_string(values.size()));
    }
    const auto a_begin = values.begin() + 1;
    const auto b_begin = a_begin + static_cast<std::ptrdiff_t>(n * n);
    return QapInstance(std::move(name), n, std::vector<double>(a_begin, b_begin), std::vector<double>(b_begin, values.end()));
}

QapInstance load_qaplib(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_qaplib(buffer.str(), path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

double qap_cost(const QapInstance& instance, std::span<const int> perm)
{
    const std::size_t n = instance.size();
    require_permutation(perm, n);
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto pi = static_cast<std::size_t>(perm[i]);
        for (std::size_t j = 0; j < n; ++j) {
            cost += instance.a(i, j) * instance.b(pi, static_cast<std::size_t>(perm[j]));
        }
    }
    return cost;
}

Assignment swap_positions(std::span<const int> perm, std::size_t i, std::size_t j)
{
    if (i >= perm.size() || j >= perm.size()) {
        throw InvalidInput("swap position out of range");
    }
    Assignment out(perm.begin(), perm.end());
    std::swap(out[i], out[j]);
    return out;
}

Assignment swap_mutation(std::span<const int> perm, Rng& rng)
{
    const std::size_t n = perm.size();
    if (n < 2) {
        throw InvalidConfiguration("swap mutation needs at least 2 locations");
    }
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) { ++j; }
    return swap_positions(perm, i, j);
}

Assignment qap_dpx_crossover(std::span<const int> p1, std::span<const int> p2, Rng& rng)
{
    const std::size_t n = p1.size();
    require_permutation(p1, n);
    require_permutation(p2, n);

    Assignment child(n, -1);
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> free_slots;
    for (std::size_t i = 0; i < n; ++i) {
        if (p1[i] == p2[i]) {
            child[i] = p1[i];
            placed[static_cast<std::size_t>(p1[i])] = 1;
        } else {
            free_slots.push_back(i);
        }
    }

    std::vector<int> rest;
    rest.reserve(free_slots.size());
    for (std::size_t f = 0; f < n; ++f) {
        if (!placed[f]) { rest.push_back(static_cast<int>(f)); }
    }
    for (std::size_t k = rest.size(); k > 1; --k) {
        std::swap(rest[k - 1], rest[rng.index(k)]);
    }
    for (std::size_t k = 0; k < free_slots.size(); ++k) {
        child[free_slots[k]] = rest[k];
    }
    return child;
}

Assignment random_assignment(std::size_t n, Rng& rng)
{
    if (n < 1) {
        throw InvalidConfiguration("assignment size must be at least 1");
    }
    Assignment perm(n);
    for (std::size_t i = 0; i < n; ++i) { perm[i] = static_cast<int>(i); }
    for (std::size_t k = n; k > 1; --k) {
        std::swap(perm[k - 1], perm[rng.index(k)]);
    }
    return perm;
}

} // namespace eea::qap
