#include "octalg/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw UsageError("cannot write " + path);
    }
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

octalg::AlgebraKind single_kind(const std::string &name) {
    auto k = octalg::parse_kind(name);
    if (!k) {
        throw UsageError("--algebra must be octonion or split here, got '" + name + "'");
    }
    return *k;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification of the octonion and split-octonion algebra identities"};
    app.set_version_flag("--version", std::string(octalg::library_version()));
    app.require_subcommand(1);

    std::string algebra = "both";
    std::vector<std::string> suites{"all"};
    std::uint64_t seed = 0;
    int trials = 1000;
    int mode_bound = 2;
    std::string table_file;
    std::string format;
    std::string out_path;

    auto *verify = app.add_subcommand("verify", "Run verification suites and print a report");
    verify->add_option("--algebra", algebra, "octonion, split or both")
        ->check(CLI::IsMember({"octonion", "split", "both"}));
    verify->add_option("--suite", suites, "tables, tensors, identities, malcev, lie3, fconst, superaffine or all")
        ->delimiter(',');
    verify->add_option("--seed", seed, "Seed for the random-element trials");
    verify->add_option("--trials", trials, "Random elements per sampled check")->check(CLI::PositiveNumber);
    verify->add_option("--mode-bound", mode_bound, "Largest |mode| in the super-affine sweeps")
        ->check(CLI::PositiveNumber);
    verify->add_option("--table-file", table_file, "JSON Cayley table replacing the built-in one of its kind");
    verify->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    verify->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string what;
    std::string export_algebra = "octonion";
    std::string export_format = "json";
    std::string export_out;
    auto *exp = app.add_subcommand("export", "Write the nonzero components of a tensor");
    exp->add_option("what", what, "gamma, b, B, f, t or p")
        ->required()
        ->check(CLI::IsMember({"gamma", "b", "B", "f", "t", "p"}));
    exp->add_option("--algebra", export_algebra, "octonion or split");
    exp->add_option("--format", export_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", export_out, "Output file; stdout when omitted");

    std::string table_algebra = "octonion";
    std::string table_format = "ascii";
    std::string table_out;
    auto *tab = app.add_subcommand("table", "Print a multiplication table");
    tab->add_option("--algebra", table_algebra, "octonion or split");
    tab->add_option("--format", table_format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));
    tab->add_option("--out", table_out, "Output file; stdout when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "octalg: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*verify) {
            octalg::SuiteSelection sel;
            sel.algebra = *octalg::parse_choice(algebra);
            try {
                sel.suites = octalg::parse_suites(suites);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            sel.seed = seed;
            sel.trials = trials;
            sel.mode_bound = mode_bound;
            if (!table_file.empty()) {
                try {
                    sel.table_override = octalg::load_table_json(slurp(table_file));
                } catch (const std::invalid_argument &e) {
                    throw UsageError(table_file + ": " + e.what());
                }
            }
            const auto start = std::chrono::steady_clock::now();
            const octalg::RunReport report = octalg::run(sel);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            emit(format == "json" ? report.json() : report.markdown(), out_path);
            std::cerr << "octalg: " << report.failures() << " failed checks, wall time " << elapsed.count()
                      << " s\n";
            return report.exit_code();
        }
        if (*exp) {
            const auto kind = single_kind(export_algebra);
            emit(octalg::render_export(kind, *octalg::parse_tensor(what), *octalg::parse_export_format(export_format)),
                 export_out);
            return 0;
        }
        if (*tab) {
            const auto kind = single_kind(table_algebra);
            emit(octalg::render_table(octalg::cayley_table(kind), *octalg::parse_table_format(table_format)),
                 table_out);
            return 0;
        }
    } catch (const UsageError &e) {
        std::cerr << "octalg: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
