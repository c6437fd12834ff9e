#include "eea/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "eea/error.hpp"
#include "eea/qap.hpp"
#include "eea/tsp.hpp"

namespace eea {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) { return {}; }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view value, std::size_t line_no, std::string_view key)
{
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc {} || ptr != value.data() + value.size()) {
        throw ParseError(line_no, std::string(key) + ": expected a non-negative integer, got '" + std::string(value) + "'");
    }
    return out;
}

double parse_real(std::string_view value, std::size_t line_no, std::string_view key)
{
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc {} || ptr != value.data() + value.size()) {
        throw ParseError(line_no, std::string(key) + ": expected a number, got '" + std::string(value) + "'");
    }
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base_dir, std::string_view value)
{
    std::filesystem::path p { std::string(value) };
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
}

ProblemKind parse_kind(std::string_view value, std::size_t line_no)
{
    if (value == "function") { return ProblemKind::Function; }
    if (value == "tsp") { return ProblemKind::Tsp; }
    if (value == "qap") { return ProblemKind::Qap; }
    throw ParseError(line_no, "type: expected function, tsp or qap, got '" + std::string(value) + "'");
}

} // namespace

void ExperimentConfig::validate() const
{
    macro.validate();
    micro.validate();
    if (problem.dimension < 1) {
        throw InvalidConfiguration("problem dimension must be at least 1");
    }
    if (problem.kind != ProblemKind::Function && !std::filesystem::exists(problem.file)) {
        throw InvalidConfiguration("instance file not found: " + problem.file.string());
    }
}

ExperimentConfig default_config(ProblemKind kind)
{
    ExperimentConfig cfg;
    cfg.problem.kind = kind;
    if (kind != ProblemKind::Function) {
        cfg.macro.generations = 50;
        cfg.micro.runs_per_fitness = 25;
    }
    if (kind == ProblemKind::Tsp) {
        cfg.problem.file = "att48.tsp";
    }
    return cfg;
}

ExperimentConfig parse_config(std::string_view text, const std::filesystem::path& base_dir)
{
    struct Entry {
        std::size_t line;
        std::string value;
    };
    std::map<std::string, Entry> entries;

    std::string section;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) { line = line.substr(0, hash); }
        line = trim(line);
        if (line.empty()) { continue; }

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError(line_no, "unterminated section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section != "macro" && section != "micro" && section != "problem" && section != "output") {
                throw ParseError(line_no, "unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected 'key = value'");
        }
        if (section.empty()) {
            throw ParseError(line_no, "key outside of a section");
        }
        const std::string key = section + "." + std::string(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!entries.emplace(key, Entry { line_no, std::string(value) }).second) {
            throw ParseError(line_no, "duplicate key " + key);
        }
    }

    ProblemKind kind = ProblemKind::Function;
    if (auto it = entries.find("problem.type"); it != entries.end()) {
        kind = parse_kind(it->second.value, it->second.line);
    }
    ExperimentConfig cfg = default_config(kind);
    if (kind == ProblemKind::Tsp) { cfg.problem.file = resolve(base_dir, cfg.problem.file.string()); }

    using Setter = std::function<void(std::string_view, std::size_t, std::string_view)>;
    const std::map<std::string, Setter, std::less<>> setters {
        { "macro.pop_size", [&](auto v, auto l, auto k) { cfg.macro.pop_size = parse_count(v, l, k); } },
        { "macro.code_length", [&](auto v, auto l, auto k) { cfg.macro.code_length = parse_count(v, l, k); } },
        { "macro.generations", [&](auto v, auto l, auto k) { cfg.macro.generations = parse_count(v, l, k); } },
        { "macro.crossover_prob", [&](auto v, auto l, auto k) { cfg.macro.crossover_prob = parse_real(v, l, k); } },
        { "macro.mutations", [&](auto v, auto l, auto k) { cfg.macro.mutations_per_chromosome = parse_count(v, l, k); } },
        { "micro.registers", [&](auto v, auto l, auto k) { cfg.micro.num_registers = parse_count(v, l, k); } },
        { "micro.generations", [&](auto v, auto l, auto k) { cfg.micro.micro_generations = parse_count(v, l, k); } },
        { "micro.runs", [&](auto v, auto l, auto k) { cfg.micro.runs_per_fitness = parse_count(v, l, k); } },
        { "problem.type", [](auto, auto, auto) { } },
        { "problem.function",
          [&](auto v, auto l, auto) {
              try {
                  cfg.problem.function = realopt::parse_function_id(v);
              } catch (const Error& e) {
                  throw ParseError(l, e.what());
              }
          } },
        { "problem.dimension", [&](auto v, auto l, auto k) { cfg.problem.dimension = parse_count(v, l, k); } },
        { "problem.sigma", [&](auto v, auto l, auto k) { cfg.problem.sigma = parse_real(v, l, k); } },
        { "problem.f5_variant",
          [&](auto v, auto l, auto) {
              if (v == "printed") {
                  cfg.problem.f5 = realopt::F5Form::Printed;
              } else if (v == "abs") {
                  cfg.problem.f5 = realopt::F5Form::Absolute;
              } else {
                  throw ParseError(l, "f5_variant: expected printed or abs");
              }
          } },
        { "problem.file", [&](auto v, auto, auto) { cfg.problem.file = resolve(base_dir, v); } },
        { "output.program", [&](auto v, auto, auto) { cfg.program_out = std::string(v); } },
        { "output.history", [&](auto v, auto, auto) { cfg.history_out = std::string(v); } },
    };

    for (const auto& [key, entry] : entries) {
        const auto it = setters.find(key);
        if (it == setters.end()) {
            throw ParseError(entry.line, "unknown key " + key);
        }
        it->second(entry.value, entry.line, key);
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_config(buffer.str(), path.parent_path());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

ProblemSelector parse_problem_selector(std::string_view line, const std::filesystem::path& base_dir)
{
    line = trim(line);
    const auto sep = line.find_first_of(" \t:");
    const std::string_view head = line.substr(0, sep);
    const std::string_view rest = sep == std::string_view::npos ? std::string_view {} : trim(line.substr(sep + 1));

    ProblemSelector sel;
    if (head == "tsp" || head == "qap") {
        if (rest.empty()) {
            throw InvalidInput("problem '" + std::string(line) + "' needs an instance path");
        }
        sel.kind = head == "tsp" ? ProblemKind::Tsp : ProblemKind::Qap;
        sel.file = resolve(base_dir, rest);
        return sel;
    }
    sel.function = realopt::parse_function_id(head);
    if (!rest.empty()) {
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
        if (ec != std::errc {} || ptr != rest.data() + rest.size() || n < 1) {
            throw InvalidInput("bad dimension in problem '" + std::string(line) + "'");
        }
        sel.dimension = n;
    }
    return sel;
}

AnyProblem make_problem(const ProblemSelector& selector)
{
    switch (selector.kind) {
    case ProblemKind::Tsp:
        return tsp::TspProblem(tsp::load_tsplib(selector.file));
    case ProblemKind::Qap:
        return qap::QapProblem(qap::load_qaplib(selector.file));
    case ProblemKind::Function:
        break;
    }
    return realopt::RealProblem(selector.function, realopt::default_domain(selector.function, selector.dimension),
                                selector.sigma, selector.f5);
}

} // namespace eea
