// gqd: compute, sweep and verify geometric discord measures from the shell.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gqd/gqd.hpp"

namespace {

enum Exit { exit_ok = 0, exit_verify_failed = 1, exit_parse = 2, exit_validation = 3, exit_unwritable = 4 };

struct WriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw WriteError("cannot write " + path);
    out << content;
    out.flush();
    if (!out) throw WriteError("cannot write " + path);
}

std::string format_axis(const std::optional<gqd::MeasurementAxis>& a) {
    if (!a) return "-";
    const auto& v = a->vector();
    return "(" + gqd::format_double(v[0]) + ", " + gqd::format_double(v[1]) + ", " + gqd::format_double(v[2]) + ")";
}

void print_result(const char* name, const gqd::MeasureResult& r) {
    std::cout << name << " = " << gqd::format_double(r.value) << "  method=" << gqd::to_string(r.method)
              << "  axis_a=" << format_axis(r.axis_a) << "  axis_b=" << format_axis(r.axis_b) << '\n';
}

const char* case_name(gqd::XCase::Tag t) {
    switch (t) {
        case gqd::XCase::Tag::Case1: return "Case1";
        case gqd::XCase::Tag::Case2: return "Case2";
        case gqd::XCase::Tag::Case3: return "Case3";
    }
    return "?";
}

int cmd_compute(const std::string& path, const std::string& measure, const std::string& method) {
    const gqd::StateRecord record = gqd::read_state_file(path);
    std::optional<gqd::XStateParams> xp;
    gqd::DensityMatrix4 rho = gqd::maximally_mixed();
    if (const auto* p = std::get_if<gqd::XStateParams>(&record)) {
        rho = gqd::x_state(*p);
        xp = gqd::normalize_x_phases(*p).normalized;
    } else {
        rho = gqd::validate_density(std::get<gqd::Matrix4c>(record));
        if (gqd::is_x_shaped(rho.matrix())) xp = gqd::normalize_x_phases(gqd::x_params_of(rho)).normalized;
    }

    const bool want_gd = measure != "ggqd";
    const bool want_ggqd = measure != "gd";
    std::cout << "state: " << (xp ? "X" : "general") << '\n';
    if (want_gd) {
        gqd::MeasureResult r;
        if (method == "brute") r = gqd::gd_bruteforce(rho);
        else if (method == "analytic" && xp) r = gqd::gd_x(*xp);
        else r = gqd::gd_dakic(rho);
        print_result("gd", r);
    }
    if (want_ggqd) {
        gqd::MeasureResult r;
        if (method == "brute") r = gqd::ggqd_bruteforce(rho);
        else if (method == "analytic" && xp) r = gqd::ggqd_x(*xp);
        else r = gqd::ggqd_general(rho);
        print_result("ggqd", r);
    }
    if (xp) std::cout << "case: " << case_name(gqd::classify_x_case(*xp).tag) << '\n';
    return exit_ok;
}

int cmd_sweep(const std::string& example, const std::string& range_text, std::optional<double> alpha,
              const std::string& out) {
    const auto family = gqd::parse_example(example);
    if (!family) throw gqd::RangeError("unknown example " + example);
    const gqd::SweepRange range = gqd::parse_range(range_text);
    gqd::SweepOptions opt;
    opt.alpha = alpha;
    const std::string csv = gqd::sweep_csv(gqd::run_sweep(*family, range, opt));
    if (out.empty() || out == "-") std::cout << csv;
    else write_file(out, csv);
    return exit_ok;
}

int cmd_verify(const gqd::RunConfig& cfg) {
    gqd::check_run_config(cfg);
    const gqd::VerifyReport rep = gqd::run_verify(cfg);
    const std::string text = gqd::format_report(rep, cfg);
    std::cout << text;
    if (!cfg.output_path.empty()) write_file(cfg.output_path, text);
    return rep.ok() ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric discord and geometric global quantum discord of two-qubit states"};
    app.require_subcommand(1);

    std::string state_file, measure = "both", method = "analytic";
    auto* compute = app.add_subcommand("compute", "Evaluate measures for a state file (DM4 or X format)");
    compute->add_option("state_file", state_file, "Path to the state file")->required();
    compute->add_option("--measure", measure, "gd, ggqd or both")->check(CLI::IsMember({"gd", "ggqd", "both"}));
    compute->add_option("--method", method, "analytic, numeric or brute")
        ->check(CLI::IsMember({"analytic", "numeric", "brute"}));

    std::string example, range, out;
    std::optional<double> alpha;
    auto* sweep = app.add_subcommand("sweep", "Write a parameter sweep of an example family as CSV");
    sweep->add_option("--example", example, "ex1 .. ex5")->required();
    sweep->add_option("--range", range, "start:end:steps")->required();
    sweep->add_option("--alpha", alpha, "Initial |00> amplitude for ex4 and ex5");
    sweep->add_option("--out", out, "Output CSV path (stdout when omitted)");

    gqd::RunConfig cfg;
    auto* verify = app.add_subcommand("verify", "Run the seeded cross-check campaign");
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_option("--trials", cfg.trials, "Number of random states")->check(CLI::PositiveNumber);
    verify->add_option("--tol", cfg.tolerance, "Oracle agreement tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--out", cfg.output_path, "Also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (*compute) return cmd_compute(state_file, measure, method);
        if (*sweep) return cmd_sweep(example, range, alpha, out);
        return cmd_verify(cfg);
    } catch (const gqd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const gqd::RangeError& e) {
        std::cerr << "bad range: " << e.what() << '\n';
        return exit_parse;
    } catch (const gqd::DomainError& e) {
        std::cerr << "bad range: " << e.what() << '\n';
        return exit_parse;
    } catch (const gqd::ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << '\n';
        return exit_validation;
    } catch (const WriteError& e) {
        std::cerr << e.what() << '\n';
        return exit_unwritable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
}
