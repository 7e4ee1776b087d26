// Brute-force reference evaluators. Nothing here uses the closed forms or
// the eigenvalue shortcuts of measures.hpp: every value is the purity of a
// measured state, maximized by exhaustive search over a grid of measurement
// axes followed by local grid refinement.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gqd/core.hpp"
#include "gqd/measures.hpp"
#include "gqd/parallel.hpp"

namespace gqd {

struct GridSpec {
    /// Polar intervals: rows theta_i = i pi / n_theta, i = 0..n_theta, with
    /// each pole a single axis.
    int n_theta = 64;
    /// Azimuthal points per non-polar row.
    int n_phi = 128;
    int refine_iters = 6;
    double refine_shrink = 0.25;
};

inline GridSpec reference_grid() { return {}; }

inline void check_grid(const GridSpec& g) {
    if (g.n_theta < 8) throw std::invalid_argument("GridSpec: n_theta must be >= 8");
    if (g.n_phi < 16) throw std::invalid_argument("GridSpec: n_phi must be >= 16");
    if (g.refine_iters < 0) throw std::invalid_argument("GridSpec: refine_iters must be >= 0");
    if (!(g.refine_shrink >= 0.1 && g.refine_shrink <= 0.9))
        throw std::invalid_argument("GridSpec: refine_shrink must lie in [0.1, 0.9]");
}

inline Vec3 polar_axis(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Every axis of the grid, poles once.
inline std::vector<Vec3> axis_grid(const GridSpec& g) {
    check_grid(g);
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(2 + (g.n_theta - 1) * g.n_phi));
    out.push_back({0.0, 0.0, 1.0});
    for (int i = 1; i < g.n_theta; ++i) {
        const double theta = std::numbers::pi * i / g.n_theta;
        for (int j = 0; j < g.n_phi; ++j) out.push_back(polar_axis(theta, 2.0 * std::numbers::pi * j / g.n_phi));
    }
    out.push_back({0.0, 0.0, -1.0});
    return out;
}

/// Axes n and -n define the same measurement. When the grid is closed under
/// n -> -n (n_phi even) this keeps one axis of each antipodal pair, so the
/// search visits the same set of measurements as axis_grid; otherwise it is
/// axis_grid itself.
inline std::vector<Vec3> measurement_grid(const GridSpec& g) {
    check_grid(g);
    if (g.n_phi % 2 != 0) return axis_grid(g);
    std::vector<Vec3> out;
    out.push_back({0.0, 0.0, 1.0});
    for (int i = 1; 2 * i <= g.n_theta; ++i) {
        const double theta = std::numbers::pi * i / g.n_theta;
        const int columns = (2 * i == g.n_theta) ? g.n_phi / 2 : g.n_phi;
        for (int j = 0; j < columns; ++j) out.push_back(polar_axis(theta, 2.0 * std::numbers::pi * j / g.n_phi));
    }
    return out;
}

inline double coarse_spacing(const GridSpec& g) {
    return std::max(std::numbers::pi / g.n_theta, 2.0 * std::numbers::pi / g.n_phi);
}

/// tr[Pi(rho)^2] for the product measurement along (a, b): the sum of the
/// squared probabilities of the four joint outcomes,
///   p_kl = tr[rho (I + k a.s)/2 (x) (I + l b.s)/2] = (1 + k a.x + l b.y + k l a^t T b) / 4.
inline double measured_purity(const BlochForm& bf, const Vec3& a, const Vec3& b) {
    const double ax = dot(a, bf.x);
    const double by = dot(b, bf.y);
    const double atb = dot(a, bf.t * b);
    double s = 0.0;
    for (int k : {1, -1})
        for (int l : {1, -1}) {
            const double p = 0.25 * (1.0 + k * ax + l * by + k * l * atb);
            s += p * p;
        }
    return s;
}

/// tr[Pi_a(rho)^2] with the measurement on A only; the post-measurement
/// state has Bloch data ((a.x) a, y, a (T^t a)^t).
inline double measured_purity_a(const BlochForm& bf, const Vec3& a) {
    const double ax = dot(a, bf.x);
    const Vec3 ta = transpose_times(bf.t, a);
    return 0.25 * (1.0 + ax * ax + norm2(bf.y) + norm2(ta));
}

/// tr[Pi_b(rho)^2] with the measurement on B only.
inline double measured_purity_b(const BlochForm& bf, const Vec3& b) {
    const double by = dot(b, bf.y);
    const Vec3 tb = bf.t * b;
    return 0.25 * (1.0 + norm2(bf.x) + by * by + norm2(tb));
}

namespace detail {

/// Up to `count` grid indices in decreasing value order whose axes are
/// pairwise more than `separation` radians apart as measurement directions.
inline std::vector<std::size_t> distinct_candidates(const std::vector<double>& values, const std::vector<Vec3>& axes,
                                                    double separation, std::size_t count = 4) {
    std::vector<std::size_t> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    const double min_cos = std::cos(separation);
    std::vector<std::size_t> picked;
    for (std::size_t idx : order) {
        bool far = true;
        for (std::size_t p : picked)
            if (std::abs(dot(axes[idx], axes[p])) >= min_cos) far = false;
        if (far) picked.push_back(idx);
        if (picked.size() == count) break;
    }
    return picked;
}

/// Local grid refinement on a product of K spheres. Each round lays a
/// (2R+1)^(2K) grid of tangent-plane offsets with spacing h around the
/// current best point (R = ceil(1/shrink), so the window covers the previous
/// spacing) and moves to the best point found; h shrinks by refine_shrink
/// per round. The running best never decreases.
template <std::size_t K, class F>
std::pair<double, std::array<Vec3, K>> refine_on_spheres(F&& f, std::array<Vec3, K> center, double value,
                                                         const GridSpec& g) {
    const int radius = static_cast<int>(std::ceil(1.0 / g.refine_shrink - 1e-12));
    const int side = 2 * radius + 1;
    std::size_t total = 1;
    for (std::size_t d = 0; d < 2 * K; ++d) total *= static_cast<std::size_t>(side);
    double h = coarse_spacing(g);
    for (int round = 0; round < g.refine_iters; ++round) {
        h *= g.refine_shrink;
        std::array<std::pair<Vec3, Vec3>, K> frames;
        for (std::size_t k = 0; k < K; ++k) frames[k] = tangent_frame(center[k]);
        const std::array<Vec3, K> base = center;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            std::array<Vec3, K> pt;
            for (std::size_t k = 0; k < K; ++k) {
                const double s = h * (static_cast<int>(rest % side) - radius);
                rest /= side;
                const double t = h * (static_cast<int>(rest % side) - radius);
                rest /= side;
                const Vec3 p = base[k] + scaled(frames[k].first, s) + scaled(frames[k].second, t);
                pt[k] = scaled(p, 1.0 / std::sqrt(norm2(p)));
            }
            const double v = f(pt);
            if (v > value) {
                value = v;
                center = pt;
            }
        }
    }
    return {value, center};
}

/// Coarse search plus refinement of one-sided purity; returns (max, axis).
template <class F>
std::pair<double, Vec3> one_sided_search(F&& purity_along, const GridSpec& g) {
    const std::vector<Vec3> grid = measurement_grid(g);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = purity_along(grid[i]);
    double best = -1.0;
    Vec3 arg = grid.front();
    for (std::size_t c : distinct_candidates(values, grid, 2.0 * coarse_spacing(g))) {
        auto [v, pt] = refine_on_spheres<1>([&](const std::array<Vec3, 1>& p) { return purity_along(p[0]); },
                                           std::array<Vec3, 1>{grid[c]}, values[c], g);
        if (v > best) {
            best = v;
            arg = pt[0];
        }
    }
    return {best, arg};
}

}  // namespace detail

/// D^G(rho) = tr rho^2 - max_{a,b} tr[Pi_{ab}(rho)]^2 by exhaustive search.
inline MeasureResult ggqd_bruteforce(const DensityMatrix4& rho, const GridSpec& g = reference_grid(),
                                     unsigned workers = 0) {
    const BlochForm bf = bloch_decompose(rho);
    const std::vector<Vec3> grid = measurement_grid(g);
    const std::size_t n = grid.size();
    std::vector<double> bx(n), by(n), bz(n), proj_y2(n);
    for (std::size_t j = 0; j < n; ++j) {
        bx[j] = grid[j][0];
        by[j] = grid[j][1];
        bz[j] = grid[j][2];
        const double p = dot(grid[j], bf.y);
        proj_y2[j] = p * p;
    }
    // Row i holds max_b of (a.x)^2 + (b.y)^2 + (a^t T b)^2 for a = grid[i],
    // i.e. 4 tr[Pi(rho)^2] - 1 (the compact form of measured_purity).
    std::vector<double> row_value(n);
    std::vector<std::size_t> row_arg(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            const Vec3& a = grid[i];
            const double ax = dot(a, bf.x);
            const Vec3 u = transpose_times(bf.t, a);
            double best = -1.0;
            std::size_t arg = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const double c = u[0] * bx[j] + u[1] * by[j] + u[2] * bz[j];
                const double v = proj_y2[j] + c * c;
                if (v > best) {
                    best = v;
                    arg = j;
                }
            }
            row_value[i] = ax * ax + best;
            row_arg[i] = arg;
        },
        workers);

    auto purity_ab = [&bf](const std::array<Vec3, 2>& p) { return measured_purity(bf, p[0], p[1]); };
    double best = -1.0;
    std::array<Vec3, 2> arg{grid.front(), grid.front()};
    for (std::size_t c : detail::distinct_candidates(row_value, grid, 2.0 * coarse_spacing(g))) {
        const std::array<Vec3, 2> start{grid[c], grid[row_arg[c]]};
        auto [v, pt] = detail::refine_on_spheres<2>(purity_ab, start, measured_purity(bf, start[0], start[1]), g);
        if (v > best) {
            best = v;
            arg = pt;
        }
    }
    return make_result(purity(rho) - best, Method::brute_force, MeasurementAxis::along(arg[0]),
                       MeasurementAxis::along(arg[1]));
}

/// One-sided D(rho) = tr rho^2 - max_a tr[Pi_a(rho)]^2 by exhaustive search.
inline MeasureResult gd_bruteforce(const DensityMatrix4& rho, const GridSpec& g = reference_grid()) {
    const BlochForm bf = bloch_decompose(rho);
    const auto [best, a] = detail::one_sided_search([&bf](const Vec3& n) { return measured_purity_a(bf, n); }, g);
    return make_result(purity(rho) - best, Method::brute_force, MeasurementAxis::along(a));
}

namespace detail {

/// max_b tr[Pi_b(sigma)]^2 for the state sigma = Pi_a(rho) obtained by
/// actually measuring rho along a.
inline std::pair<double, Vec3> second_stage(const DensityMatrix4& rho, const Vec3& a, const GridSpec& g) {
    const DensityMatrix4 sigma = apply_measurement(rho, MeasurementAxis::along(a), std::nullopt);
    const BlochForm sb = bloch_decompose(sigma);
    return one_sided_search([&sb](const Vec3& b) { return measured_purity_b(sb, b); }, g);
}

inline MeasureResult sequential_result(const DensityMatrix4& rho, const Vec3& a, const Vec3& b) {
    const MeasurementAxis axis_a = MeasurementAxis::along(a);
    const MeasurementAxis axis_b = MeasurementAxis::along(b);
    const DensityMatrix4 sigma = apply_measurement(rho, axis_a, std::nullopt);
    const DensityMatrix4 tau = apply_measurement(sigma, std::nullopt, axis_b);
    const double first = purity(rho) - purity(sigma);   // one-sided discord term on A at a
    const double second = purity(sigma) - purity(tau);  // one-sided discord of sigma on B at b
    return make_result(first + second, Method::tqc_sequential, axis_a, axis_b);
}

}  // namespace detail

/// Total quantum correlations as a sum of successive one-sided terms:
/// measure A along a, then measure B on the post-measurement state,
///   Q = [tr rho^2 - tr sigma_a^2] + [tr sigma_a^2 - max_b tr Pi_b(sigma_a)^2],
/// with the first measurement chosen to minimize the total. Each candidate
/// a is scored by a separate one-sided search on B over sigma_a.
inline MeasureResult tqc_sequential(const DensityMatrix4& rho, const GridSpec& g = reference_grid(),
                                    unsigned workers = 0) {
    const BlochForm bf = bloch_decompose(rho);
    const std::vector<Vec3> grid = measurement_grid(g);
    const std::size_t n = grid.size();
    // Coarse stage: sigma_a has Bloch data x' = (a.x) a, y' = y, T' = a (T^t a)^t.
    std::vector<double> stage_value(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            const Vec3& a = grid[i];
            BlochForm sigma;
            sigma.x = scaled(a, dot(a, bf.x));
            sigma.y = bf.y;
            sigma.t = outer(a, transpose_times(bf.t, a));
            double best = -1.0;
            for (const Vec3& b : grid) best = std::max(best, measured_purity_b(sigma, b));
            stage_value[i] = best;
        },
        workers);

    double best = -1.0;
    Vec3 best_a = grid.front();
    for (std::size_t c : detail::distinct_candidates(stage_value, grid, 2.0 * coarse_spacing(g))) {
        auto score = [&](const std::array<Vec3, 1>& p) { return detail::second_stage(rho, p[0], g).first; };
        auto [v, pt] = detail::refine_on_spheres<1>(score, std::array<Vec3, 1>{grid[c]}, score({grid[c]}), g);
        if (v > best) {
            best = v;
            best_a = pt[0];
        }
    }
    const Vec3 best_b = detail::second_stage(rho, best_a, g).second;
    return detail::sequential_result(rho, best_a, best_b);
}

/// Sequential construction with a greedy first stage: a* maximizes
/// tr[Pi_a(rho)]^2 on its own, then b* is optimized on Pi_{a*}(rho). This is
/// an upper bound on tqc_sequential and generally differs from it.
inline MeasureResult tqc_greedy(const DensityMatrix4& rho, const GridSpec& g = reference_grid()) {
    const BlochForm bf = bloch_decompose(rho);
    const Vec3 a = detail::one_sided_search([&bf](const Vec3& n) { return measured_purity_a(bf, n); }, g).second;
    const Vec3 b = detail::second_stage(rho, a, g).second;
    return detail::sequential_result(rho, a, b);
}

}  // namespace gqd
