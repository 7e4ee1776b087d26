// Geometric discord (one-sided) and geometric global quantum discord
// (two-sided) of two-qubit states: closed forms for X states and
// sphere-optimization evaluators for arbitrary states.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "gqd/core.hpp"
#include "gqd/linalg.hpp"
#include "gqd/sphere.hpp"

namespace gqd {

/// X state in the computational basis: diagonal (d0, d1, d2, d3) and the two
/// antidiagonal entries rho_03 and rho_12.
struct XStateParams {
    double d0 = 0.25;
    double d1 = 0.25;
    double d2 = 0.25;
    double d3 = 0.25;
    Complex a03{};
    Complex a12{};

    /// Grouped so that exchanging d1 and d2 gives a bit-identical result.
    double diag_sum_squares() const { return (d0 * d0 + d3 * d3) + (d1 * d1 + d2 * d2); }

    friend bool operator==(const XStateParams&, const XStateParams&) = default;
};

inline constexpr double tol_x_params = 1e-12;

inline std::vector<Violation> diagnose_x_params(const XStateParams& p) {
    std::vector<Violation> out;
    for (double v : {p.d0, p.d1, p.d2, p.d3, p.a03.real(), p.a03.imag(), p.a12.real(), p.a12.imag()})
        if (!std::isfinite(v)) {
            out.push_back({Violation::Kind::NonFinite, std::numeric_limits<double>::infinity()});
            return out;
        }
    const double most_negative = std::min({p.d0, p.d1, p.d2, p.d3});
    if (most_negative < -tol_x_params) out.push_back({Violation::Kind::NegativeProbability, -most_negative});
    const double trace_dev = std::abs(p.d0 + p.d1 + p.d2 + p.d3 - 1.0);
    if (trace_dev > tol_x_params) out.push_back({Violation::Kind::TraceNotOne, trace_dev});
    const double excess03 = std::abs(p.a03) - std::sqrt(std::max(0.0, p.d0 * p.d3));
    const double excess12 = std::abs(p.a12) - std::sqrt(std::max(0.0, p.d1 * p.d2));
    const double excess = std::max(excess03, excess12);
    if (excess > tol_x_params) out.push_back({Violation::Kind::NotPSD, excess});
    return out;
}

inline void check_x_params(const XStateParams& p) {
    auto v = diagnose_x_params(p);
    if (!v.empty()) throw ValidationError(std::move(v));
}

enum class Method { analytic_x, dakic, general_opt, matrix_opt, brute_force, tqc_sequential };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::analytic_x: return "analytic_x";
        case Method::dakic: return "dakic";
        case Method::general_opt: return "general_opt";
        case Method::matrix_opt: return "matrix_opt";
        case Method::brute_force: return "brute_force";
        case Method::tqc_sequential: return "tqc_sequential";
    }
    return "unknown";
}

inline constexpr double tol_negative_clamp = 1e-10;

struct MeasureResult {
    double value = 0.0;
    Method method = Method::analytic_x;
    /// Optimal measurement axes when the evaluator determines them.
    std::optional<MeasurementAxis> axis_a;
    std::optional<MeasurementAxis> axis_b;
    /// Set when a round-off negative in [-1e-10, 0) was clamped to zero.
    bool clamped = false;
};

inline MeasureResult make_result(double value, Method method, std::optional<MeasurementAxis> a = std::nullopt,
                                 std::optional<MeasurementAxis> b = std::nullopt) {
    MeasureResult r{value, method, std::move(a), std::move(b), false};
    if (value < 0.0) {
        if (value < -tol_negative_clamp)
            throw std::runtime_error(std::string("negative discord from ") + to_string(method) + ": " +
                                     std::to_string(value));
        r.value = 0.0;
        r.clamped = true;
    }
    return r;
}

/// Raised by the X-state closed forms when an antidiagonal still carries a
/// phase; normalize_x_phases must run first.
class ComplexInput : public std::invalid_argument {
public:
    ComplexInput() : std::invalid_argument("X-state closed forms need real nonnegative antidiagonals") {}
};

namespace detail {

inline void require_real_antidiagonals(const XStateParams& p) {
    for (const Complex& z : {p.a03, p.a12})
        if (std::abs(z.imag()) > tol_x_params || z.real() < -tol_x_params) throw ComplexInput();
}

/// (1/2) sum d_i^2 - d0 d2 - d1 d3
inline double one_sided_floor(const XStateParams& p) {
    return 0.5 * p.diag_sum_squares() - p.d0 * p.d2 - p.d1 * p.d3;
}

/// sum d_i^2 - 1/4
inline double two_sided_floor(const XStateParams& p) { return p.diag_sum_squares() - 0.25; }

inline double coherence(const XStateParams& p) {
    const double s = p.a12.real() + p.a03.real();
    return s * s;
}

inline double coherence_energy(const XStateParams& p) {
    return 2.0 * (p.a12.real() * p.a12.real() + p.a03.real() * p.a03.real());
}

}  // namespace detail

/// D = (|x|^2 + |T|^2 - k_max) / 4 with k_max the top eigenvalue of
/// x x^t + T T^t. The optimal axis is the corresponding eigenvector.
inline MeasureResult gd_dakic(const BlochForm& b) {
    const Mat3 m = outer(b.x, b.x) + b.t * transpose(b.t);
    const double k_max = largest_eigenvalue3(m);
    const double value = 0.25 * (norm2(b.x) + frobenius2(b.t) - k_max);
    return make_result(value, Method::dakic, MeasurementAxis::along(symmetric_eigen3(m).vectors[0]));
}

inline MeasureResult gd_dakic(const DensityMatrix4& rho) { return gd_dakic(bloch_decompose(rho)); }

inline MeasureResult gd_x(const XStateParams& p) {
    check_x_params(p);
    detail::require_real_antidiagonals(p);
    const double floor = detail::one_sided_floor(p);
    // Written so the floor cancels exactly when it is the larger term.
    const double value = detail::coherence_energy(p) - (std::max(floor, detail::coherence(p)) - floor);
    return make_result(value, Method::analytic_x);
}

inline MeasureResult ggqd_x(const XStateParams& p) {
    check_x_params(p);
    detail::require_real_antidiagonals(p);
    const double floor = detail::two_sided_floor(p);
    const double value = detail::coherence_energy(p) - (std::max(floor, detail::coherence(p)) - floor);
    return make_result(value, Method::analytic_x);
}

namespace detail {

/// Largest eigenvalue of |u><u| + |v><v| for u, v in R^3.
inline double rank_two_top_eigenvalue(const Vec3& u, const Vec3& v) {
    const double uu = norm2(u);
    const double vv = norm2(v);
    const double uv = dot(u, v);
    return 0.5 * (uu + vv + std::sqrt((uu - vv) * (uu - vv) + 4.0 * uv * uv));
}

inline Vec3 top_eigenvector(const Mat3& m) { return symmetric_eigen3(m).vectors[0]; }

}  // namespace detail

/// Two-sided measure of an arbitrary state. The optimization over the
/// A-side axis is done in closed form (top eigenvalue of the rank-two matrix
/// x x^t + (Tb)(Tb)^t); the B-side axis b is found by sphere maximization.
inline MeasureResult ggqd_general(const BlochForm& bf, const OptimizerConfig& opt = {}) {
    const Vec3 x = bf.x;
    const Vec3 y = bf.y;
    const Mat3 t = bf.t;
    auto objective = [&](const Vec3& b) {
        const double by = dot(b, y);
        return detail::rank_two_top_eigenvalue(x, t * b) + by * by;
    };
    const SphereMaximum best = maximize_on_sphere(objective, opt);
    const double value = 0.25 * (norm2(x) + norm2(y) + frobenius2(t) - best.value);
    const Vec3 tb = t * best.argmax;
    const Vec3 a = detail::top_eigenvector(outer(x, x) + outer(tb, tb));
    return make_result(value, Method::general_opt, MeasurementAxis::along(a), MeasurementAxis::along(best.argmax));
}

inline MeasureResult ggqd_general(const DensityMatrix4& rho, const OptimizerConfig& opt = {}) {
    return ggqd_general(bloch_decompose(rho), opt);
}

/// Block matrix (1/sqrt2) [[1, n^t], [1, -n^t]] mapping the coefficient
/// basis to the two outcomes of the measurement along n.
inline RealMatrix<2, 4> outcome_matrix(const Vec3& n) {
    const double s = 1.0 / std::sqrt(2.0);
    RealMatrix<2, 4> m;
    m(0, 0) = s;
    m(1, 0) = s;
    for (std::size_t k = 0; k < 3; ++k) {
        m(0, k + 1) = s * n[k];
        m(1, k + 1) = -s * n[k];
    }
    return m;
}

/// tr(A C B^t B C^t A^t) for the outcome matrices of axes a and b.
inline double measured_coefficient_weight(const RealMatrix<4, 4>& c, const Vec3& a, const Vec3& b) {
    const RealMatrix<2, 4> am = outcome_matrix(a);
    const RealMatrix<2, 4> bm = outcome_matrix(b);
    const RealMatrix<2, 2> p = am * c * transpose(bm);
    return trace(p * transpose(p));
}

/// Same two-sided measure as ggqd_general, evaluated from the coefficient
/// matrix form tr(C C^t) - max_{A,B} tr(A C B^t B C^t A^t). For fixed b the
/// A-side maximum is N_00 + lambda_max(N_sub) with N = C B^t B C^t, obtained
/// from the generic 3x3 eigen-solver rather than the rank-two formula.
inline MeasureResult ggqd_matrix_form(const BlochForm& bf, const OptimizerConfig& opt = {}) {
    const RealMatrix<4, 4> c = bf.coefficient_matrix();
    auto inner = [&c](const Vec3& b) {
        const RealMatrix<2, 4> bm = outcome_matrix(b);
        const RealMatrix<4, 2> cbt = c * transpose(bm);
        const RealMatrix<4, 4> n = cbt * transpose(cbt);
        Mat3 sub;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) sub(i, j) = n(i + 1, j + 1);
        return std::pair{n(0, 0), sub};
    };
    auto objective = [&inner](const Vec3& b) {
        const auto [n00, sub] = inner(b);
        return n00 + largest_eigenvalue3(sub);
    };
    const SphereMaximum best = maximize_on_sphere(objective, opt);
    const double value = frobenius2(c) - best.value;
    const auto [n00, sub] = inner(best.argmax);
    const Vec3 a = detail::top_eigenvector(sub);
    return make_result(value, Method::matrix_opt, MeasurementAxis::along(a), MeasurementAxis::along(best.argmax));
}

inline MeasureResult ggqd_matrix_form(const DensityMatrix4& rho, const OptimizerConfig& opt = {}) {
    return ggqd_matrix_form(bloch_decompose(rho), opt);
}

/// The three orderings of an X state's coherence (rho_12 + rho_03)^2 against
/// the two diagonal floors. The two-sided floor always dominates the
/// one-sided one, so these are the only possibilities:
///   Case1: coherence >= two_sided_floor
///   Case2: two_sided_floor >= coherence >= one_sided_floor
///   Case3: coherence <= one_sided_floor
/// Ties go to the lower-numbered case.
struct XCase {
    enum class Tag { Case1 = 1, Case2 = 2, Case3 = 3 };
    Tag tag;
    double coherence;
    double two_sided_floor;
    double one_sided_floor;
};

inline XCase classify_x_case(const XStateParams& p) {
    check_x_params(p);
    detail::require_real_antidiagonals(p);
    const double c = detail::coherence(p);
    const double hi = detail::two_sided_floor(p);
    const double lo = detail::one_sided_floor(p);
    XCase::Tag tag = XCase::Tag::Case3;
    if (c >= hi) tag = XCase::Tag::Case1;
    else if (c >= lo) tag = XCase::Tag::Case2;
    return {tag, c, hi, lo};
}

/// GGQD - GD of an X state from the per-case closed forms:
///   Case1: [2(d0 + d2) - 1]^2 / 4
///   Case2: (rho_12 + rho_03)^2 - [(d0 - d2)^2 + (d1 - d3)^2] / 2
///   Case3: 0
inline double gap_x(const XStateParams& p) {
    const XCase xc = classify_x_case(p);
    switch (xc.tag) {
        case XCase::Tag::Case1: {
            const double s = 2.0 * (p.d0 + p.d2) - 1.0;
            return 0.25 * s * s;
        }
        case XCase::Tag::Case2: {
            const double u = p.d0 - p.d2;
            const double v = p.d1 - p.d3;
            return xc.coherence - 0.5 * (u * u + v * v);
        }
        case XCase::Tag::Case3: return 0.0;
    }
    return 0.0;
}

}  // namespace gqd
