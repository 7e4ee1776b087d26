// Parameter sweeps over the example families, written as CSV.
#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gqd/io.hpp"
#include "gqd/measures.hpp"
#include "gqd/parallel.hpp"
#include "gqd/states.hpp"

namespace gqd {

enum class ExampleFamily { ex1, ex2, ex3, ex4, ex5 };

inline std::optional<ExampleFamily> parse_example(std::string_view s) {
    if (s == "ex1") return ExampleFamily::ex1;
    if (s == "ex2") return ExampleFamily::ex2;
    if (s == "ex3") return ExampleFamily::ex3;
    if (s == "ex4") return ExampleFamily::ex4;
    if (s == "ex5") return ExampleFamily::ex5;
    return std::nullopt;
}

class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SweepRange {
    double start = 0.0;
    double end = 1.0;
    std::size_t steps = 2;

    /// Evenly spaced points; the last one is exactly `end`.
    std::vector<double> points() const {
        std::vector<double> out(steps);
        const double h = (end - start) / static_cast<double>(steps - 1);
        for (std::size_t i = 0; i < steps; ++i) out[i] = start + h * static_cast<double>(i);
        out.back() = end;
        return out;
    }
};

/// Parses "start:end:steps".
inline SweepRange parse_range(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = text.find(':', pos);
        parts.push_back(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    if (parts.size() != 3) throw RangeError("range must look like start:end:steps");
    auto number = [](std::string_view s, const char* what) {
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
            throw RangeError(std::string("range ") + what + " is not a number");
        return v;
    };
    SweepRange r;
    r.start = number(parts[0], "start");
    r.end = number(parts[1], "end");
    std::size_t steps = 0;
    const auto res = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), steps);
    if (parts[2].empty() || res.ec != std::errc{} || res.ptr != parts[2].data() + parts[2].size())
        throw RangeError("range steps must be a positive integer");
    if (steps < 2) throw RangeError("range needs at least 2 steps");
    if (!(r.end > r.start)) throw RangeError("range end must exceed start");
    r.steps = steps;
    return r;
}

struct SweepRecord {
    double param = 0.0;
    double gd = 0.0;
    double ggqd = 0.0;
    Method method_gd = Method::analytic_x;
    Method method_ggqd = Method::analytic_x;
};

struct SweepOptions {
    /// Initial |00> amplitude for ex4 and ex5; family default when unset.
    std::optional<double> alpha;
    unsigned workers = 0;
};

inline constexpr double default_alpha_ex4 = 0.70710678118654752440;
inline constexpr double default_alpha_ex5 = 0.1;

/// X-state parameters of a family at sweep parameter t. ex4 is swept in
/// tau, ex5 in gamma*t.
inline XStateParams family_state(ExampleFamily family, double t, const SweepOptions& opt = {}) {
    switch (family) {
        case ExampleFamily::ex1: return example1(t);
        case ExampleFamily::ex2: return example2(t);
        case ExampleFamily::ex3: return example3(t);
        case ExampleFamily::ex4: {
            const double alpha = opt.alpha.value_or(default_alpha_ex4);
            if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("ex4 needs alpha in [0, 1]");
            const double beta = std::sqrt(1.0 - alpha * alpha);
            if (!(t >= 0.0)) throw DomainError("ex4 needs tau >= 0");
            return example4(alpha, beta, tc_gt_from_tau(t));
        }
        case ExampleFamily::ex5: return example5(opt.alpha.value_or(default_alpha_ex5), t);
    }
    throw DomainError("unknown example family");
}

inline std::vector<SweepRecord> run_sweep(ExampleFamily family, const SweepRange& range, const SweepOptions& opt = {}) {
    const std::vector<double> ts = range.points();
    // Validate every point before spending time on any of them.
    std::vector<XStateParams> states;
    states.reserve(ts.size());
    for (double t : ts) states.push_back(family_state(family, t, opt));
    std::vector<SweepRecord> rows(ts.size());
    parallel_for(
        ts.size(),
        [&](std::size_t i) {
            rows[i].param = ts[i];
            rows[i].gd = gd_x(states[i]).value;
            rows[i].ggqd = ggqd_x(states[i]).value;
        },
        opt.workers);
    return rows;
}

inline std::string sweep_csv(const std::vector<SweepRecord>& rows) {
    std::string out = "param,gd,ggqd\n";
    for (const auto& r : rows) out += format_double(r.param) + ',' + format_double(r.gd) + ',' + format_double(r.ggqd) + '\n';
    return out;
}

}  // namespace gqd
