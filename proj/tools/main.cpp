// Command-line front end over the C API: classification, bound tables,
// the tau oracle, instance generation and the property suite.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mmineig.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalFailure = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail_status(mm_status status) {
    const int code = (status == MM_ERR_INPUT) ? kExitInputError : kExitNumericalFailure;
    throw CliError{code, mm_last_error()};
}

using MatrixPtr = std::unique_ptr<mm_matrix, decltype(&mm_matrix_free)>;
using ReportPtr = std::unique_ptr<mm_report, decltype(&mm_report_free)>;

MatrixPtr load_matrix(const std::string& source, const std::string& format) {
    mm_matrix* raw = nullptr;
    const char* fmt = format.empty() ? nullptr : format.c_str();
    const mm_status st = mm_matrix_parse_file(source.c_str(), fmt, &raw);
    if (st != MM_OK) fail_status(st);
    return MatrixPtr(raw, &mm_matrix_free);
}

double default_tolerance() {
    if (const char* env = std::getenv("MMIN_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw CliError{kExitInputError, std::string("MMIN_TOL is not a positive decimal: '") +
                                                env + "'"};
        return v;
    }
    return 1e-12;
}

// Display rounding: 4 decimals, half to even.
std::string round4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string full_precision(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<mm_bound_row> report_rows(const mm_report* report) {
    std::vector<mm_bound_row> rows(static_cast<std::size_t>(mm_report_row_count(report)));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (mm_report_row(report, static_cast<int>(i), &rows[i]) != MM_OK)
            fail_status(MM_ERR_INPUT);
    return rows;
}

void print_rows_text(const std::vector<mm_bound_row>& rows) {
    std::printf("%-24s %-6s %-4s %s\n", "method", "kind", "t", "value");
    for (const mm_bound_row& row : rows) {
        const std::string t = row.t >= 0 ? std::to_string(row.t) : "-";
        const std::string value = row.applicable
                                      ? round4(row.value)
                                      : std::string("n/a (") + row.reason + ")";
        std::printf("%-24s %-6s %-4s %s\n", row.method, row.kind, t.c_str(), value.c_str());
    }
}

void print_rows_csv(const std::vector<mm_bound_row>& rows) {
    std::printf("method,kind,t,value,applicable,reason\n");
    for (const mm_bound_row& row : rows) {
        const std::string t = row.t >= 0 ? std::to_string(row.t) : "";
        std::printf("%s,%s,%s,%s,%s,%s\n", row.method, row.kind, t.c_str(),
                    row.applicable ? full_precision(row.value).c_str() : "",
                    row.applicable ? "true" : "false", row.reason);
    }
}

nlohmann::json rows_json(const std::vector<mm_bound_row>& rows) {
    auto arr = nlohmann::json::array();
    for (const mm_bound_row& row : rows) {
        nlohmann::json obj;
        obj["method"] = row.method;
        obj["kind"] = row.kind;
        if (row.t >= 0)
            obj["t"] = row.t;
        else
            obj["t"] = nullptr;
        obj["applicable"] = static_cast<bool>(row.applicable);
        if (row.applicable)
            obj["value"] = row.value;
        else
            obj["value"] = nullptr;
        obj["reason"] = row.reason;
        arr.push_back(std::move(obj));
    }
    return arr;
}

int run_classify(const std::string& source, const std::string& format) {
    const MatrixPtr m = load_matrix(source, format);
    mm_class_info info{};
    std::vector<double> ratios(static_cast<std::size_t>(mm_matrix_order(m.get())));
    const mm_status st = mm_classify(m.get(), -1.0, &info, ratios.data());
    if (st != MM_OK) fail_status(st);
    std::printf("order: %d\n", mm_matrix_order(m.get()));
    std::printf("is_z_matrix: %s\n", info.is_z_matrix ? "true" : "false");
    std::printf("positive_diagonal: %s\n", info.positive_diagonal ? "true" : "false");
    std::printf("is_sdd: %s\n", info.is_sdd ? "true" : "false");
    std::printf("is_wcdd: %s\n", info.is_wcdd ? "true" : "false");
    std::printf("is_m_matrix: %s\n", info.is_m_matrix ? "true" : "false");
    std::printf("zero_tolerance: %s\n", full_precision(info.zero_tolerance).c_str());
    std::printf("dominance_ratios:");
    for (double d : ratios) std::printf(" %s", full_precision(d).c_str());
    std::printf("\n");
    return kExitOk;
}

int run_table(const std::string& source, const std::string& format, int t_max,
              const std::string& out_format, const std::string& methods, bool with_tau) {
    const MatrixPtr m = load_matrix(source, format);
    mm_report* raw = nullptr;
    const mm_status st = mm_report_run(m.get(), t_max, default_tolerance(), &raw);
    if (st != MM_OK) fail_status(st);
    const ReportPtr report(raw, &mm_report_free);

    std::vector<mm_bound_row> rows = report_rows(report.get());
    if (!methods.empty()) {
        std::set<std::string> wanted;
        std::istringstream in(methods);
        std::string name;
        while (std::getline(in, name, ',')) wanted.insert(name);
        std::vector<mm_bound_row> kept;
        for (const mm_bound_row& row : rows)
            if (wanted.count(row.method)) kept.push_back(row);
        rows = std::move(kept);
    }

    double tau = 0.0;
    int has_tau = 0;
    mm_report_tau(report.get(), &tau, &has_tau);

    if (out_format == "text") {
        if (with_tau) {
            std::printf("matrix: %s  t_max: %d\n", source.c_str(), t_max);
            if (has_tau)
                std::printf("tau: %s\n", round4(tau).c_str());
            else
                std::printf("tau: n/a (matrix not a nonsingular M-matrix)\n");
        }
        print_rows_text(rows);
    } else if (out_format == "csv") {
        print_rows_csv(rows);
    } else if (out_format == "json") {
        nlohmann::json doc;
        doc["matrix"] = source;
        doc["t_max"] = t_max;
        if (has_tau)
            doc["tau"] = tau;
        else
            doc["tau"] = nullptr;
        doc["rows"] = rows_json(rows);
        std::printf("%s\n", doc.dump(2).c_str());
    } else {
        throw CliError{kExitInputError, "unknown output format '" + out_format + "'"};
    }
    return kExitOk;
}

int run_oracle(const std::string& source, const std::string& format, double tol) {
    const MatrixPtr m = load_matrix(source, format);
    double tau = 0.0;
    const mm_status st = mm_tau_oracle(m.get(), tol, &tau);
    if (st != MM_OK) fail_status(st);
    std::printf("%s\n", round4(tau).c_str());
    return kExitOk;
}

int run_generate(int n, std::uint64_t seed, bool ds_inverse, double margin, double density,
                 double magnitude, double strength, const std::string& out,
                 const std::string& out_format) {
    mm_matrix* raw = nullptr;
    const mm_status st = ds_inverse
                             ? mm_generate_ds_inverse(n, seed, strength, &raw)
                             : mm_generate_sdd(n, seed, margin, density, magnitude, &raw);
    if (st != MM_OK) fail_status(st);
    const MatrixPtr m(raw, &mm_matrix_free);
    if (out.empty()) {
        char* text = nullptr;
        if (mm_matrix_render(m.get(), out_format.c_str(), &text) != MM_OK)
            fail_status(MM_ERR_INPUT);
        std::fputs(text, stdout);
        mm_string_free(text);
    } else {
        const mm_status wst = mm_matrix_write_file(m.get(), out.c_str(), out_format.c_str());
        if (wst != MM_OK) fail_status(wst);
    }
    return kExitOk;
}

int run_verify(int trials, int t_max, std::uint64_t seed) {
    char* failures = nullptr;
    int count = 0;
    double max_gap = 0.0;
    const mm_status st = mm_verify(trials, t_max, seed, &failures, &count, &max_gap);
    if (st != MM_OK) fail_status(st);
    std::printf("trials: %d\nfailures: %d\nmax_gap: %s\n", trials, count,
                full_precision(max_gap).c_str());
    if (count > 0 && failures != nullptr) std::fputs(failures, stderr);
    mm_string_free(failures);
    return count == 0 ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified lower bounds for the minimum eigenvalue of M-matrices"};
    app.require_subcommand(1);

    std::string source, in_format, out_format = "text", methods, out_path;
    std::string gen_format = "plain";
    int t_max = 10, n = 10, trials = 200;
    std::uint64_t seed = 1;
    double tol = default_tolerance();
    bool ds_inverse = false;
    double margin = 0.1, density = 1.0, magnitude = 1.0, strength = 1.0;

    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("source", source, "matrix file or fixture name (ex1|ex2|ex3)")
            ->required();
        cmd->add_option("--in-format", in_format, "plain|csv|json (default: by extension)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "print classification flags");
    add_source(classify_cmd);

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "print selected bound rows");
    add_source(bounds_cmd);
    bounds_cmd->add_option("--t-max", t_max, "ladder depth")->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--methods", methods, "comma-separated method filter");
    bounds_cmd->add_option("--format", out_format, "text|csv|json");

    CLI::App* report_cmd = app.add_subcommand("report", "print the full bound table");
    add_source(report_cmd);
    report_cmd->add_option("--t-max", t_max, "ladder depth")->check(CLI::PositiveNumber);
    report_cmd->add_option("--format", out_format, "text|csv|json");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "print tau(A) from the Perron oracle");
    add_source(oracle_cmd);
    oracle_cmd->add_option("--tol", tol, "power-iteration tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* generate_cmd = app.add_subcommand("generate", "write a generated test matrix");
    generate_cmd->add_option("--n", n, "order")->check(CLI::PositiveNumber);
    generate_cmd->add_option("--seed", seed, "generator seed");
    generate_cmd->add_flag("--ds-inverse", ds_inverse,
                           "equal-diagonal family with doubly stochastic inverse");
    generate_cmd->add_option("--margin", margin, "minimum dominance margin");
    generate_cmd->add_option("--density", density, "off-diagonal fill probability");
    generate_cmd->add_option("--magnitude", magnitude, "off-diagonal scale");
    generate_cmd->add_option("--strength", strength, "off-diagonal mass (ds family)");
    generate_cmd->add_option("--out", out_path, "output file (default: stdout)");
    generate_cmd->add_option("--format", gen_format, "plain|csv|json");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the seeded property suite");
    verify_cmd->add_option("--trials", trials, "number of generated instances")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--t-max", t_max, "ladder depth")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n" << app.help();
        return kExitInputError;
    }

    try {
        if (*classify_cmd) return run_classify(source, in_format);
        if (*bounds_cmd) return run_table(source, in_format, t_max, out_format, methods, false);
        if (*report_cmd) return run_table(source, in_format, t_max, out_format, "", true);
        if (*oracle_cmd) return run_oracle(source, in_format, tol);
        if (*generate_cmd)
            return run_generate(n, seed, ds_inverse, margin, density, magnitude, strength,
                                out_path, gen_format);
        if (*verify_cmd) return run_verify(trials, t_max, seed);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitInputError;
}
