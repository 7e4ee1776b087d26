// Seeded fuzzing campaign that cross-checks the closed forms against the
// brute-force oracle and the sequential construction.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "gqd/io.hpp"
#include "gqd/oracle.hpp"
#include "gqd/parallel.hpp"
#include "gqd/random.hpp"
#include "gqd/states.hpp"

namespace gqd {

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    double tolerance = 1e-4;
    GridSpec grid = reference_grid();
    std::string output_path;
    /// Cap on general states fed to the (slow) sequential check.
    std::size_t max_sequential_trials = 100;
    unsigned workers = 0;
};

inline void check_run_config(const RunConfig& cfg) {
    if (!(cfg.tolerance > 0.0) || !std::isfinite(cfg.tolerance)) throw std::invalid_argument("tolerance must be > 0");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    check_grid(cfg.grid);
}

inline constexpr double tol_sequential = 2e-6;
inline constexpr double tol_lower_bound = 1e-12;
inline constexpr double tol_gap = 1e-12;

struct CheckStats {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    double worst = 0.0;

    bool ok() const { return passed == total; }
};

struct SignStats {
    std::size_t above = 0;  // ggqd - gd > 1e-12
    std::size_t equal = 0;
    std::size_t below = 0;
    double min_difference = 0.0;
    double max_difference = 0.0;
};

struct VerifyReport {
    std::vector<CheckStats> checks;
    SignStats general_sign;
    std::size_t general_states = 0;
    std::vector<std::string> failures;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckStats& c) { return c.ok(); });
    }
};

namespace detail {

inline std::string describe_x(std::size_t trial, const XStateParams& p) {
    std::string s = "x-state trial " + std::to_string(trial) + ": d=(" + format_double(p.d0) + ' ' + format_double(p.d1) +
                    ' ' + format_double(p.d2) + ' ' + format_double(p.d3) + ") a03=(" + format_double(p.a03.real()) +
                    ' ' + format_double(p.a03.imag()) + ") a12=(" + format_double(p.a12.real()) + ' ' +
                    format_double(p.a12.imag()) + ')';
    return s;
}

inline std::string describe_general(std::size_t trial, const DensityMatrix4& rho) {
    std::string s = "general trial " + std::to_string(trial) + ": rho=[";
    for (std::size_t k = 0; k < 16; ++k) {
        if (k) s += ' ';
        s += format_double(rho.matrix().data[k].real()) + (rho.matrix().data[k].imag() < 0 ? "" : "+") +
             format_double(rho.matrix().data[k].imag()) + 'i';
    }
    return s + ']';
}

inline void record(CheckStats& c, double deviation, bool pass) {
    ++c.total;
    if (pass) ++c.passed;
    c.worst = std::max(c.worst, deviation);
}

}  // namespace detail

/// The X-state stream opens with the maximally mixed state so a single-trial
/// run exercises the trivial case; every later state is a fresh random draw.
inline std::vector<XStateParams> verify_x_states(std::uint64_t seed, std::size_t count) {
    StateSampler sampler(seed);
    std::vector<XStateParams> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        XStateParams p = sampler.x_params();
        if (i == 0) p = {0.25, 0.25, 0.25, 0.25, 0.0, 0.0};
        out.push_back(p);
    }
    return out;
}

inline std::vector<DensityMatrix4> verify_general_states(std::uint64_t seed, std::size_t count) {
    StateSampler sampler(seed ^ 0x9E3779B97F4A7C15ULL);
    std::vector<DensityMatrix4> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.density(1 + static_cast<int>(i % 4)));
    return out;
}

inline VerifyReport run_verify(const RunConfig& cfg) {
    check_run_config(cfg);
    const auto xs = verify_x_states(cfg.seed, cfg.trials);
    const auto gs = verify_general_states(cfg.seed, cfg.trials);
    const std::size_t n_seq = std::min(cfg.trials, cfg.max_sequential_trials);

    struct XRow {
        double ggqd_dev, gd_dev, bound, gap_dev;
    };
    struct GRow {
        double gd_dev, sign, seq_dev;
    };
    std::vector<XRow> xr(xs.size());
    std::vector<GRow> gr(gs.size());

    // Workers are spread over trials; each oracle call runs single-threaded.
    parallel_for(
        xs.size(),
        [&](std::size_t i) {
            const XStateParams p = normalize_x_phases(xs[i]).normalized;
            const DensityMatrix4 rho = x_state(xs[i]);
            const double gd = gd_x(p).value;
            const double ggqd = ggqd_x(p).value;
            xr[i].ggqd_dev = std::abs(ggqd_bruteforce(rho, cfg.grid, 1).value - ggqd);
            xr[i].gd_dev = std::abs(gd_bruteforce(rho, cfg.grid).value - gd);
            xr[i].bound = ggqd - gd;
            xr[i].gap_dev = std::abs(gap_x(p) - (ggqd - gd));
        },
        cfg.workers);
    parallel_for(
        gs.size(),
        [&](std::size_t i) {
            gr[i].gd_dev = std::abs(gd_bruteforce(gs[i], cfg.grid).value - gd_dakic(gs[i]).value);
            gr[i].sign = ggqd_general(gs[i]).value - gd_dakic(gs[i]).value;
            gr[i].seq_dev = i < n_seq ? std::abs(tqc_sequential(gs[i], cfg.grid, 1).value -
                                                 ggqd_bruteforce(gs[i], cfg.grid, 1).value)
                                      : 0.0;
        },
        cfg.workers);

    VerifyReport rep;
    CheckStats ggqd_oracle{"ggqd_x vs brute force", 0, 0, 0.0};
    CheckStats gd_oracle{"gd_x vs brute force", 0, 0, 0.0};
    CheckStats bound{"ggqd_x >= gd_x", 0, 0, 0.0};
    CheckStats gap{"case gap vs subtraction", 0, 0, 0.0};
    CheckStats gd_general{"gd_dakic vs brute force (general)", 0, 0, 0.0};
    CheckStats sequential{"tqc_sequential vs brute force (general)", 0, 0, 0.0};

    for (std::size_t i = 0; i < xs.size(); ++i) {
        const XRow& r = xr[i];
        const bool ok_g = r.ggqd_dev <= cfg.tolerance;
        const bool ok_d = r.gd_dev <= cfg.tolerance;
        const bool ok_b = r.bound >= -tol_lower_bound;
        const bool ok_c = r.gap_dev <= tol_gap;
        detail::record(ggqd_oracle, r.ggqd_dev, ok_g);
        detail::record(gd_oracle, r.gd_dev, ok_d);
        detail::record(bound, std::max(0.0, -r.bound), ok_b);
        detail::record(gap, r.gap_dev, ok_c);
        if (!(ok_g && ok_d && ok_b && ok_c)) rep.failures.push_back(detail::describe_x(i, xs[i]));
    }
    rep.general_sign.min_difference = gr.empty() ? 0.0 : gr[0].sign;
    rep.general_sign.max_difference = rep.general_sign.min_difference;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const GRow& r = gr[i];
        const bool ok_d = r.gd_dev <= cfg.tolerance;
        const bool ok_s = r.seq_dev <= tol_sequential;
        detail::record(gd_general, r.gd_dev, ok_d);
        if (i < n_seq) detail::record(sequential, r.seq_dev, ok_s);
        if (!(ok_d && ok_s)) rep.failures.push_back(detail::describe_general(i, gs[i]));
        SignStats& s = rep.general_sign;
        if (r.sign > tol_lower_bound) ++s.above;
        else if (r.sign < -tol_lower_bound) ++s.below;
        else ++s.equal;
        s.min_difference = std::min(s.min_difference, r.sign);
        s.max_difference = std::max(s.max_difference, r.sign);
    }
    rep.general_states = gs.size();
    rep.checks = {ggqd_oracle, gd_oracle, bound, gap, gd_general, sequential};
    return rep;
}

inline std::string format_report(const VerifyReport& rep, const RunConfig& cfg) {
    std::ostringstream os;
    os << "seed " << cfg.seed << ", trials " << cfg.trials << ", tolerance " << format_double(cfg.tolerance) << '\n';
    for (const auto& c : rep.checks)
        os << (c.ok() ? "PASS " : "FAIL ") << c.name << ": " << c.passed << '/' << c.total << " passed, worst "
           << format_double(c.worst) << '\n';
    const SignStats& s = rep.general_sign;
    os << "INFO ggqd - gd on " << rep.general_states << " general states: " << s.above << " above, " << s.equal
       << " equal, " << s.below << " below, range [" << format_double(s.min_difference) << ", "
       << format_double(s.max_difference) << "]\n";
    for (const auto& f : rep.failures) os << "failing " << f << '\n';
    os << (rep.ok() ? "all checks passed" : "some checks failed") << '\n';
    return os.str();
}

}  // namespace gqd
