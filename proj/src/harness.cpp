#include "eea/harness.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace eea {

namespace {

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') { out += '"'; }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) { break; }
        start = comma + 1;
    }
    for (auto& f : fields) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) { f.remove_prefix(1); }
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) { f.remove_suffix(1); }
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line_no, std::string_view column)
{
    const std::string text(field);
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ParseError(line_no, "column " + std::string(column) + ": not a number: '" + text + "'");
    }
    return value;
}

} // namespace

void GaConfig::validate() const
{
    if (pop_size < 1) {
        throw InvalidConfiguration("GA pop_size must be at least 1");
    }
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0) || !(mutation_prob >= 0.0 && mutation_prob <= 1.0)) {
        throw InvalidConfiguration("GA probabilities must lie in [0, 1]");
    }
}

std::size_t match_budget(const EAProgram& program)
{
    return evals_per_generation(program);
}

double delta_percent(double baseline_mean, double evolved_mean)
{
    if (evolved_mean == 0.0) {
        throw UndefinedDelta("delta is undefined for an evolved mean of 0");
    }
    return (baseline_mean - evolved_mean) / evolved_mean * 100.0;
}

std::string format_delta(double delta)
{
    if (!std::isfinite(delta)) {
        return delta > 0 ? "inf" : (delta < 0 ? "-inf" : "nan");
    }
    // the nudge keeps values such as 3.02 (stored as 3.0199...) from truncating to 3.01
    const double scaled = delta * 100.0;
    double truncated = std::trunc(scaled + (scaled >= 0 ? 1e-7 : -1e-7)) / 100.0;
    if (truncated == 0.0) { truncated = 0.0; }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", truncated);
    return buf;
}

std::string format_value(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

namespace detail {

GaConfig baseline_config(const EAProgram& program)
{
    GaConfig cfg;
    cfg.pop_size = match_budget(program);
    cfg.generations = program.micro_generations;
    if (cfg.pop_size < 1) {
        throw InvalidConfiguration("program creates no individuals per generation; no baseline budget to match");
    }
    return cfg;
}

MicroConfig evolved_config(const EAProgram& program)
{
    MicroConfig cfg;
    cfg.num_registers = program.num_registers;
    cfg.micro_generations = program.micro_generations;
    cfg.runs_per_fitness = 1;
    return cfg;
}

ComparisonRow finish_row(std::string name, std::size_t runs, const std::vector<double>& baseline,
                         const std::vector<double>& evolved)
{
    ComparisonRow row;
    row.problem = std::move(name);
    row.runs = runs;
    row.baseline = summarize(baseline);
    row.evolved = summarize(evolved);
    if (row.evolved.mean != 0.0) {
        row.delta_percent = delta_percent(row.baseline.mean, row.evolved.mean);
    }
    return row;
}

} // namespace detail

ComparisonRow compare_on_serial(const EAProgram& program, const AnyProblem& problem, std::size_t problem_index,
                                std::size_t runs, std::uint64_t seed)
{
    validate_program(program);
    return detail::guarded_row(problem, runs, [&] {
        std::vector<double> evolved(runs);
        std::vector<double> baseline(runs);
        std::visit(
            [&](const auto& p) {
                for (std::size_t r = 0; r < runs; ++r) {
                    evolved[r] = detail::comparison_run(program, p, seed, problem_index, r, Algorithm::Evolved);
                    baseline[r] = detail::comparison_run(program, p, seed, problem_index, r, Algorithm::Baseline);
                }
            },
            problem);
        return detail::finish_row(problem_name(problem), runs, baseline, evolved);
    });
}

ComparisonRow compare_on(const EAProgram& program, const AnyProblem& problem, std::size_t problem_index,
                         std::size_t runs, std::uint64_t seed, int workers)
{
    validate_program(program);
    return detail::guarded_row(problem, runs, [&] {
        std::vector<double> evolved(runs);
        std::vector<double> baseline(runs);
        std::visit(
            [&](const auto& p) {
                parallel_for(2 * runs, workers, [&](std::size_t task) {
                    const std::size_t r = task / 2;
                    if (task % 2 == 0) {
                        evolved[r] = detail::comparison_run(program, p, seed, problem_index, r, Algorithm::Evolved);
                    } else {
                        baseline[r] = detail::comparison_run(program, p, seed, problem_index, r, Algorithm::Baseline);
                    }
                });
            },
            problem);
        return detail::finish_row(problem_name(problem), runs, baseline, evolved);
    });
}

std::vector<ComparisonRow> run_comparison_serial(const EAProgram& program, const std::vector<AnyProblem>& problems,
                                                 std::size_t runs, std::uint64_t seed)
{
    std::vector<ComparisonRow> rows;
    rows.reserve(problems.size());
    for (std::size_t i = 0; i < problems.size(); ++i) {
        rows.push_back(compare_on_serial(program, problems[i], i, runs, seed));
    }
    return rows;
}

std::vector<ComparisonRow> run_comparison(const EAProgram& program, const std::vector<AnyProblem>& problems,
                                          std::size_t runs, std::uint64_t seed, int workers)
{
    std::vector<ComparisonRow> rows;
    rows.reserve(problems.size());
    for (std::size_t i = 0; i < problems.size(); ++i) {
        rows.push_back(compare_on(program, problems[i], i, runs, seed, workers));
    }
    return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows)
{
    out << "problem,alg,runs,mean,stddev,delta_percent\n";
    for (const auto& row : rows) {
        const std::string name = csv_field(row.problem);
        if (row.error) {
            out << name << ',' << csv_field("error: " + *row.error) << ',' << row.runs << ",,,\n";
            continue;
        }
        const std::string runs = row.runs > 0 ? std::to_string(row.runs) : "";
        out << name << ",ga," << runs << ',' << format_value(row.baseline.mean) << ','
            << format_value(row.baseline.stddev) << ",\n";
        out << name << ",evolved," << runs << ',' << format_value(row.evolved.mean) << ','
            << format_value(row.evolved.stddev) << ",\n";
        out << name << ",delta," << runs << ",,," << (row.delta_percent ? format_delta(*row.delta_percent) : "undefined")
            << '\n';
    }
}

std::vector<ComparisonRow> rows_from_means(std::string_view csv)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t nl = csv.find('\n', start);
        lines.push_back(csv.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
        if (nl == std::string_view::npos) { break; }
        start = nl + 1;
    }

    std::size_t header_line = 0;
    while (header_line < lines.size() && split_fields(lines[header_line]).front().empty()) { ++header_line; }
    if (header_line == lines.size()) {
        throw ParseError(0, "means file has no header line");
    }

    std::map<std::string, std::size_t, std::less<>> column;
    const auto header = split_fields(lines[header_line]);
    for (std::size_t i = 0; i < header.size(); ++i) {
        column.emplace(std::string(header[i]), i);
    }
    for (const char* required : { "problem", "baseline_mean", "evolved_mean" }) {
        if (!column.contains(required)) {
            throw ParseError(header_line + 1, std::string("missing column '") + required + "'");
        }
    }

    std::vector<ComparisonRow> rows;
    for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
        const auto fields = split_fields(lines[li]);
        if (fields.size() == 1 && fields.front().empty()) { continue; }
        if (fields.size() != header.size()) {
            throw ParseError(li + 1, "expected " + std::to_string(header.size()) + " fields, found "
                                         + std::to_string(fields.size()));
        }
        auto number = [&](std::string_view name) { return parse_number(fields[column.find(name)->second], li + 1, name); };
        auto optional_number = [&](std::string_view name) {
            const auto it = column.find(name);
            return it == column.end() ? 0.0 : parse_number(fields[it->second], li + 1, name);
        };

        ComparisonRow row;
        row.problem = std::string(fields[column.find("problem")->second]);
        row.baseline.mean = number("baseline_mean");
        row.evolved.mean = number("evolved_mean");
        row.baseline.stddev = optional_number("baseline_stddev");
        row.evolved.stddev = optional_number("evolved_stddev");
        row.runs = static_cast<std::size_t>(optional_number("runs"));
        row.baseline.count = row.evolved.count = row.runs;
        if (row.evolved.mean != 0.0) {
            row.delta_percent = delta_percent(row.baseline.mean, row.evolved.mean);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace eea
