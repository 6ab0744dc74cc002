// magicsq: construct, verify, model and benchmark magic squares.
//
// Exit codes:
//   0  success / square is magic
//   1  square is not magic (verify), or a runtime failure (bench)
//   2  invalid arguments, malformed input, oversized model, write failure
//   3  generated square failed self-verification
//   4  csp solve hit the time limit (result unknown)
//   5  csp solve proved the model infeasible

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "magic/bench.hpp"
#include "magic/construct.hpp"
#include "magic/csp.hpp"
#include "magic/io.hpp"
#include "magic/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotMagic = 1;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;
constexpr int kExitTimeout = 4;
constexpr int kExitInfeasible = 5;

magic::MatrixFormat parse_format(const std::string& name) {
    if (name == "csv") return magic::MatrixFormat::Csv;
    if (name == "json") return magic::MatrixFormat::Json;
    throw magic::InvalidArgumentError("unknown format '" + name + "'");
}

// "-" means stdout.
void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        if (!std::cout.good()) throw magic::IoError("failed to write stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw magic::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.good()) throw magic::IoError("failed to write '" + path + "'");
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw magic::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct GenArgs {
    int n = 0;
    std::int64_t a_min = 1;
    std::string format = "csv";
    std::string out = "-";
};

int cmd_gen(const GenArgs& args) {
    const magic::Square square = magic::make_magic_square(args.n, args.a_min);
    const magic::VerifyReport report = magic::verify(square);
    if (!report.is_magic) {
        std::cerr << "internal error: generated square failed verification\n";
        for (const auto& finding : report.failures) {
            std::cerr << "  " << magic::describe(finding) << "\n";
        }
        return kExitSelfCheck;
    }
    const auto format = parse_format(args.format);
    write_text(args.out, format == magic::MatrixFormat::Csv
                             ? magic::to_csv(square)
                             : magic::to_json(square));
    return kExitOk;
}

struct VerifyArgs {
    std::string in;
    std::int64_t a_min = 1;
    bool a_min_given = false;
    std::string format = "auto";
    int max_failures = magic::kDefaultFailureCap;
};

int cmd_verify(const VerifyArgs& args) {
    const std::string text = read_text(args.in);
    const magic::MatrixFormat format = args.format == "auto"
                                           ? magic::detect_format(text)
                                           : parse_format(args.format);
    magic::Square square = [&] {
        if (format == magic::MatrixFormat::Json) {
            magic::Square parsed = magic::parse_json(text);
            if (args.a_min_given && parsed.a_min() != args.a_min) {
                throw magic::ParseError(
                    "--a-min " + std::to_string(args.a_min) +
                    " conflicts with document a_min " +
                    std::to_string(parsed.a_min()));
            }
            return parsed;
        }
        return magic::parse_csv(text, args.a_min);
    }();

    const magic::VerifyReport report =
        magic::verify(square, args.max_failures);
    std::cout << "magic: " << (report.is_magic ? "yes" : "no") << "\n"
              << "n: " << square.n() << "\n"
              << "a_min: " << square.a_min() << "\n"
              << "constant: " << report.magic_constant << "\n";
    if (!report.is_magic) {
        std::cout << "failures: " << report.total_failures << " (showing "
                  << report.failures.size() << ", cap " << report.failure_cap
                  << ")\n";
        for (const auto& finding : report.failures) {
            std::cout << magic::describe(finding) << "\n";
        }
    }
    return report.is_magic ? kExitOk : kExitNotMagic;
}

struct CspArgs {
    int n = 0;
    std::int64_t a_min = 1;
    std::string mode = "solve";
    double time_limit_s = 60.0;
    std::string out = "-";
    std::string format = "csv";
    std::string solution_file;
    bool enumerate = false;
    std::int64_t var_limit = magic::ConstraintModel::kDefaultVariableLimit;
};

int cmd_csp(const CspArgs& args) {
    const magic::ConstraintModel model =
        magic::build_model(args.n, args.a_min, args.var_limit);
    const auto format = parse_format(args.format);
    const auto serialize = [&](const magic::Square& square) {
        return format == magic::MatrixFormat::Csv ? magic::to_csv(square)
                                                  : magic::to_json(square);
    };

    if (args.mode == "export") {
        std::ostringstream buffer;
        magic::export_lp(model, buffer);
        write_text(args.out, buffer.str());
        return kExitOk;
    }
    if (args.mode == "decode") {
        if (args.solution_file.empty()) {
            throw magic::InvalidArgumentError(
                "--solution is required with --mode decode");
        }
        std::istringstream in(read_text(args.solution_file));
        const auto values = magic::parse_solution_file(model, in);
        const magic::Square square = magic::decode_solution(model, values);
        write_text(args.out, serialize(square));
        return kExitOk;
    }
    if (args.mode != "solve") {
        throw magic::InvalidArgumentError("unknown mode '" + args.mode + "'");
    }

    magic::SolveOptions options;
    options.time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(args.time_limit_s * 1000.0));
    options.enumerate = args.enumerate;
    const magic::SolveResult result = magic::solve_builtin(model, options);
    std::cerr << "status: " << magic::to_string(result.status)
              << " solutions: " << result.squares.size()
              << " complete: " << (result.complete ? "yes" : "no")
              << " nodes: " << result.stats.nodes
              << " backtracks: " << result.stats.backtracks << " seconds: "
              << result.stats.seconds << "\n";
    switch (result.status) {
        case magic::SolveStatus::Timeout:
            std::cerr << "time limit reached; satisfiability unknown\n";
            return kExitTimeout;
        case magic::SolveStatus::Infeasible:
            std::cerr << "model proven infeasible\n";
            return kExitInfeasible;
        case magic::SolveStatus::Solved: break;
    }
    std::string text;
    for (std::size_t s = 0; s < result.squares.size(); ++s) {
        if (s > 0) text += "\n";
        text += serialize(result.squares[s]);
    }
    write_text(args.out, text);
    return kExitOk;
}

struct BenchArgs {
    int min_n = 3;
    int max_n = 3;
    int step = 1;
    std::string method = "fast";
    int repetitions = 3;
    double csp_time_limit_s = 120.0;
    std::string out_csv = "-";
    std::string out_fit;
};

int cmd_bench(const BenchArgs& args) {
    if (args.min_n < 3 || args.max_n < args.min_n) {
        throw magic::InvalidArgumentError(
            "need 3 <= min-n <= max-n, got " + std::to_string(args.min_n) +
            ".." + std::to_string(args.max_n));
    }
    if (args.step < 1) {
        throw magic::InvalidArgumentError("step must be at least 1");
    }
    magic::BenchMethod method;
    if (args.method == "fast") {
        method = magic::BenchMethod::Fast;
    } else if (args.method == "csp") {
        method = magic::BenchMethod::Csp;
    } else {
        throw magic::InvalidArgumentError("unknown method '" + args.method +
                                          "'");
    }
    std::vector<int> orders;
    for (int n = args.min_n; n <= args.max_n; n += args.step) {
        orders.push_back(n);
    }
    magic::BenchConfig config;
    config.repetitions = args.repetitions;
    config.csp_time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(args.csp_time_limit_s * 1000.0));

    const auto samples = magic::run_bench(orders, method, config);
    std::ostringstream csv;
    magic::write_bench_csv(csv, samples);
    write_text(args.out_csv, csv.str());

    const auto fits = magic::fit_per_class(samples);
    if (fits.empty()) {
        std::cerr << "no class has 3 distinct orders; fit omitted\n";
    }
    std::ostringstream fit_json;
    magic::write_fit_json(fit_json, fits);
    write_text(args.out_fit.empty() ? "-" : args.out_fit, fit_json.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magic square construction, verification and CSP tooling"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "construct a magic square");
    gen->add_option("--n", gen_args.n, "order (>= 3)")->required();
    gen->add_option("--a-min", gen_args.a_min, "minimum entry (default 1)");
    gen->add_option("--format", gen_args.format, "csv or json");
    gen->add_option("--out", gen_args.out, "output path, - for stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a matrix document");
    verify->add_option("path", verify_args.in, "matrix file, - for stdin")
        ->required();
    CLI::Option* a_min_opt = verify->add_option(
        "--a-min", verify_args.a_min, "declared minimum entry (csv input)");
    verify->add_option("--format", verify_args.format, "csv, json or auto");
    verify->add_option("--max-failures", verify_args.max_failures,
                       "failure report cap");

    CspArgs csp_args;
    CLI::App* csp = app.add_subcommand("csp", "binary CSP model tooling");
    csp->add_option("--n", csp_args.n, "order (>= 3)")->required();
    csp->add_option("--a-min", csp_args.a_min, "minimum entry (default 1)");
    csp->add_option("--mode", csp_args.mode, "solve, export or decode");
    csp->add_option("--time-limit", csp_args.time_limit_s,
                    "solve time limit in seconds");
    csp->add_option("--out", csp_args.out, "output path, - for stdout");
    csp->add_option("--format", csp_args.format, "csv or json output");
    csp->add_option("--solution", csp_args.solution_file,
                    "solution file for --mode decode");
    csp->add_flag("--enumerate", csp_args.enumerate,
                  "collect every solution (exhaustive)");
    csp->add_option("--var-limit", csp_args.var_limit,
                    "variable count guard");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "timing harness");
    bench->add_option("--min-n", bench_args.min_n, "first order")->required();
    bench->add_option("--max-n", bench_args.max_n, "last order")->required();
    bench->add_option("--step", bench_args.step, "order stride (default 1)");
    bench->add_option("--method", bench_args.method, "fast or csp");
    bench->add_option("--reps", bench_args.repetitions,
                      "timed repetitions per order (default 3)");
    bench->add_option("--csp-time-limit", bench_args.csp_time_limit_s,
                      "per-solve limit in seconds for --method csp");
    bench->add_option("--out-csv", bench_args.out_csv,
                      "samples CSV path, - for stdout");
    bench->add_option("--out-fit", bench_args.out_fit,
                      "fit JSON path (default: stdout after the CSV)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_args);
        if (verify->parsed()) {
            verify_args.a_min_given = a_min_opt->count() > 0;
            return cmd_verify(verify_args);
        }
        if (csp->parsed()) return cmd_csp(csp_args);
        if (bench->parsed()) {
            try {
                return cmd_bench(bench_args);
            } catch (const magic::InvalidArgumentError&) {
                throw;
            } catch (const magic::Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitFailure;
            }
        }
    } catch (const magic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
