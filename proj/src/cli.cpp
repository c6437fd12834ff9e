#include "eea/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "eea/config.hpp"
#include "eea/error.hpp"
#include "eea/harness.hpp"
#include "eea/interpreter.hpp"
#include "eea/lgp.hpp"
#include "eea/program_text.hpp"
#include "eea/stats.hpp"

namespace eea {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw IoError("cannot write " + path.string());
    }
}

EAProgram load_program(const fs::path& path)
{
    const std::string text = read_file(path);
    try {
        return parse_program(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

std::string exact(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

/// Emits data to --out when given, otherwise to standard output.
void emit(const std::string& out_path, const std::string& content, std::ostream& out)
{
    if (out_path.empty()) {
        out << content;
    } else {
        write_file(out_path, content);
    }
}

struct Shared {
    std::uint64_t seed = 1;
    int workers = 0;
    std::string out;
};

void add_shared(CLI::App* cmd, Shared& shared)
{
    cmd->add_option("--seed", shared.seed, "Master seed")->capture_default_str();
    cmd->add_option("--workers", shared.workers, "Parallel workers (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--out", shared.out, "Output path");
}

int cmd_evolve(const std::string& config_path, const std::string& problem_override, const Shared& shared,
               std::ostream& out, std::ostream& err)
{
    ExperimentConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    if (!problem_override.empty()) {
        const ProblemSelector sel = parse_problem_selector(problem_override);
        if (sel.kind != cfg.problem.kind && config_path.empty()) {
            cfg = default_config(sel.kind);
        }
        cfg.problem = sel;
    }
    cfg.macro.master_seed = derive_seed(shared.seed, { 0 });
    cfg.micro.seed = derive_seed(shared.seed, { 1 });
    cfg.validate();

    const AnyProblem problem = make_problem(cfg.problem);
    const ProgramFitness fitness = [&](const EAProgram& program) {
        return std::visit([&](const auto& p) { return program_fitness(program, p, cfg.micro, shared.workers); }, problem);
    };

    SearchOptions options;
    options.workers = shared.workers;
    const std::size_t per_generation = cfg.macro.attempts_per_generation();
    options.on_attempt = [&](std::size_t attempt, double best) {
        if (attempt % per_generation == 0) {
            err << "generation " << attempt / per_generation << '/' << cfg.macro.generations << " best "
                << format_value(best) << '\n';
        }
    };

    err << "evolving on " << problem_name(problem) << '\n';
    const SearchResult result
        = steady_state_search(cfg.macro, cfg.micro.num_registers, cfg.micro.micro_generations, fitness, options);

    const fs::path dir = shared.out.empty() ? fs::path(".") : fs::path(shared.out);
    const fs::path program_path = cfg.program_out.is_absolute() ? cfg.program_out : dir / cfg.program_out;
    const fs::path history_path = cfg.history_out.is_absolute() ? cfg.history_out : dir / cfg.history_out;

    write_file(program_path, serialize_program(result.best));
    std::string history = "attempt,best_fitness\n";
    for (std::size_t i = 0; i < result.history.size(); ++i) {
        history += std::to_string(i) + ',' + exact(result.history[i]) + '\n';
    }
    write_file(history_path, history);

    out << "best_fitness," << exact(result.best_fitness) << '\n';
    out << "program," << program_path.string() << '\n';
    out << "history," << history_path.string() << '\n';
    return kExitOk;
}

int cmd_run(const std::string& program_path, const std::string& problem_text, std::size_t runs, const Shared& shared,
            std::ostream& out)
{
    const EAProgram program = load_program(program_path);
    validate_program(program);
    const AnyProblem problem = make_problem(parse_problem_selector(problem_text));

    MicroConfig micro;
    micro.num_registers = program.num_registers;
    micro.micro_generations = program.micro_generations;
    micro.runs_per_fitness = runs;
    micro.seed = shared.seed;

    const std::vector<RunTrace> traces
        = std::visit([&](const auto& p) { return execute_runs(program, p, micro, shared.workers); }, problem);
    std::vector<double> bests;
    bests.reserve(traces.size());
    for (const auto& t : traces) { bests.push_back(t.best_fitness); }
    const SampleStats stats = summarize(bests);

    out << "problem,runs,mean,stddev\n"
        << problem_name(problem) << ',' << runs << ',' << format_value(stats.mean) << ',' << format_value(stats.stddev)
        << '\n';

    if (!shared.out.empty()) {
        std::string trace = "run,generation,best_fitness\n";
        for (std::size_t r = 0; r < traces.size(); ++r) {
            const auto& per_gen = traces[r].best_per_generation;
            for (std::size_t g = 0; g < per_gen.size(); ++g) {
                trace += std::to_string(r) + ',' + std::to_string(g) + ',' + exact(per_gen[g]) + '\n';
            }
        }
        write_file(shared.out, trace);
    }
    return kExitOk;
}

int cmd_bench(const std::string& program_path, const std::string& list_path, const std::string& means_path,
              std::size_t runs, const Shared& shared, std::ostream& out, std::ostream& err)
{
    std::ostringstream csv;
    if (!means_path.empty()) {
        const std::string text = read_file(means_path);
        try {
            write_comparison_csv(csv, rows_from_means(text));
        } catch (const ParseError& e) {
            throw ParseError(e.line(), means_path + ": " + e.what());
        }
        emit(shared.out, csv.str(), out);
        return kExitOk;
    }
    if (program_path.empty() || list_path.empty()) {
        throw CLI::ValidationError("bench", "needs PROGRAM and LIST, or --from-means");
    }

    const EAProgram program = load_program(program_path);
    validate_program(program);
    const fs::path base = fs::path(list_path).parent_path();

    std::vector<ComparisonRow> rows;
    std::istringstream lines(read_file(list_path));
    std::string line;
    std::size_t index = 0;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) { line.erase(hash); }
        if (line.find_first_not_of(" \t\r") == std::string::npos) { continue; }
        line.erase(line.find_last_not_of(" \t\r") + 1);
        const std::size_t problem_index = index++;

        std::optional<AnyProblem> problem;
        try {
            problem = make_problem(parse_problem_selector(line, base));
        } catch (const std::exception& e) {
            err << "skipping '" << line << "': " << e.what() << '\n';
            ComparisonRow row;
            row.problem = line;
            row.runs = runs;
            row.error = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        err << "benchmarking " << problem_name(*problem) << '\n';
        rows.push_back(compare_on(program, *problem, problem_index, runs, shared.seed, shared.workers));
        if (rows.back().error) {
            err << problem_name(*problem) << ": " << *rows.back().error << '\n';
        }
    }
    write_comparison_csv(csv, rows);
    emit(shared.out, csv.str(), out);
    return kExitOk;
}

int cmd_render(const std::string& program_path, const Shared& shared, std::ostream& out)
{
    emit(shared.out, render_pseudocode(load_program(program_path)), out);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app { "Evolve evolutionary algorithms with linear genetic programming", "eea" };
    app.require_subcommand(1);

    Shared evolve_shared;
    std::string config_path;
    std::string evolve_problem;
    auto* evolve = app.add_subcommand("evolve", "Evolve an EA program; writes the program and a history CSV");
    evolve->add_option("config", config_path, "Experiment config file");
    evolve->add_option("--problem", evolve_problem, "Training problem, e.g. f1, f3:10, tsp:att48.tsp");
    add_shared(evolve, evolve_shared);

    Shared run_shared;
    std::string run_program;
    std::string run_problem = "f1";
    std::size_t run_runs = 100;
    auto* run = app.add_subcommand("run", "Execute a program; prints mean and stddev of best fitness");
    run->add_option("program", run_program, "Program file")->required();
    run->add_option("--problem", run_problem, "Problem, e.g. f1, f3:10, qap:chr12c.dat")->capture_default_str();
    run->add_option("--runs", run_runs, "Independent runs")->check(CLI::PositiveNumber)->capture_default_str();
    add_shared(run, run_shared);

    Shared bench_shared;
    std::string bench_program;
    std::string bench_list;
    std::string bench_means;
    std::size_t bench_runs = 100;
    auto* bench = app.add_subcommand("bench", "Compare a program with the budget-matched GA; writes CSV");
    bench->add_option("program", bench_program, "Program file");
    bench->add_option("list", bench_list, "Problem list file");
    bench->add_option("--from-means", bench_means, "Compute delta rows from a CSV of published means");
    bench->add_option("--runs", bench_runs, "Runs per algorithm")->check(CLI::PositiveNumber)->capture_default_str();
    add_shared(bench, bench_shared);

    Shared render_shared;
    std::string render_program;
    auto* render = app.add_subcommand("render", "Print a program as pseudo-code");
    render->add_option("program", render_program, "Program file")->required();
    add_shared(render, render_shared);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    }

    try {
        if (evolve->parsed()) { return cmd_evolve(config_path, evolve_problem, evolve_shared, out, err); }
        if (run->parsed()) { return cmd_run(run_program, run_problem, run_runs, run_shared, out); }
        if (bench->parsed()) {
            return cmd_bench(bench_program, bench_list, bench_means, bench_runs, bench_shared, out, err);
        }
        return cmd_render(render_program, render_shared, out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    }
}

} // namespace eea
