// Maximization of smooth functions on the unit sphere S^2.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqd/linalg.hpp"

namespace gqd {

struct OptimizerConfig {
    int seeds = 512;
    /// Acceptance threshold on the spread of the best three refined starts.
    double tol = 1e-9;
    /// A start stops once a full sweep moves it less than this (radians).
    double step_tol = 1e-10;
    int max_sweeps = 200;
};

class OptimizerDidNotConverge : public std::runtime_error {
public:
    explicit OptimizerDidNotConverge(double spread)
        : std::runtime_error("sphere maximization did not converge: best-start spread " + std::to_string(spread)),
          spread_(spread) {}
    double spread() const noexcept { return spread_; }

private:
    double spread_;
};

/// n points spread quasi-uniformly by the golden-angle spiral.
inline std::vector<Vec3> fibonacci_sphere(int n) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * i;
        pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return pts;
}

/// Two unit vectors completing n to a right-handed orthonormal frame.
inline std::pair<Vec3, Vec3> tangent_frame(const Vec3& n) {
    const Vec3 helper = std::abs(n[0]) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 u = cross(n, helper);
    u = scaled(u, 1.0 / std::sqrt(norm2(u)));
    const Vec3 v = cross(n, u);
    return {u, v};
}

/// Point reached by moving `angle` radians from n along the great circle
/// heading in tangent direction t.
inline Vec3 geodesic_step(const Vec3& n, const Vec3& t, double angle) {
    const Vec3 p = scaled(n, std::cos(angle)) + scaled(t, std::sin(angle));
    return scaled(p, 1.0 / std::sqrt(norm2(p)));
}

struct SphereMaximum {
    double value = 0.0;
    Vec3 argmax{0.0, 0.0, 1.0};
    /// Best value minus third-best value over the refined starts.
    double spread = 0.0;
};

namespace detail {

/// Golden-section maximization of g on [lo, hi]; returns the abscissa.
template <class G>
double golden_section_max(G&& g, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double gc = g(c);
    double gd = g(d);
    while (hi - lo > tol) {
        if (gc >= gd) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - inv_phi * (hi - lo);
            gc = g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + inv_phi * (hi - lo);
            gd = g(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Local ascent from `start`. Each sweep line-searches along the two great
/// circles through the current point in the directions of a tangent frame,
/// i.e. coordinate ascent in local polar coordinates projected back onto
/// the sphere. The step window follows the last move size.
template <class F>
SphereMaximum coordinate_ascent(F&& f, Vec3 start, double initial_step, const OptimizerConfig& cfg) {
    Vec3 n = start;
    double fn = f(n);
    double window = initial_step;
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        const auto [u, v] = tangent_frame(n);
        const double before = fn;
        double moved = 0.0;
        for (const Vec3& dir : {u, v}) {
            const Vec3 base = n;
            auto along = [&](double s) { return f(geodesic_step(base, dir, s)); };
            const double s = detail::golden_section_max(along, -window, window, cfg.step_tol);
            const Vec3 cand = geodesic_step(base, dir, s);
            const double fc = f(cand);
            if (fc > fn) {
                n = cand;
                fn = fc;
                moved = std::max(moved, std::abs(s));
            }
        }
        if (moved < cfg.step_tol || fn - before <= 1e-16 * std::max(1.0, std::abs(fn))) break;
        // Keep a window comfortably larger than the last accepted move so an
        // interior optimum stays bracketed.
        window = std::clamp(4.0 * moved, 64.0 * cfg.step_tol, initial_step);
    }
    return {fn, n, 0.0};
}

/// Multi-start maximization: every Fibonacci seed is refined by coordinate
/// ascent; the result is accepted when the best three refined values agree
/// within cfg.tol. Seeds are visited in a fixed order and ties keep the
/// earliest seed, so the result is deterministic.
template <class F>
SphereMaximum maximize_on_sphere(F&& f, const OptimizerConfig& cfg = {}) {
    if (cfg.seeds < 3) throw std::invalid_argument("maximize_on_sphere needs at least three seeds");
    const auto seeds = fibonacci_sphere(cfg.seeds);
    const double spacing = std::sqrt(4.0 * std::numbers::pi / cfg.seeds);
    std::vector<double> values;
    values.reserve(seeds.size());
    SphereMaximum best{-std::numeric_limits<double>::infinity(), seeds.front(), 0.0};
    for (const Vec3& s : seeds) {
        const SphereMaximum local = coordinate_ascent(f, s, spacing, cfg);
        values.push_back(local.value);
        if (local.value > best.value) best = local;
    }
    std::partial_sort(values.begin(), values.begin() + 3, values.end(), std::greater<>());
    best.spread = values[0] - values[2];
    if (!(best.spread <= cfg.tol)) throw OptimizerDidNotConverge(best.spread);
    return best;
}

}  // namespace gqd
