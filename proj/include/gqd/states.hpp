// X-state construction, phase normalization and the example state families:
// Bell-diagonal mixtures, two atoms in a Tavis-Cummings cavity and two atoms
// decaying into a common vacuum reservoir.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gqd/core.hpp"
#include "gqd/measures.hpp"

namespace gqd {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline DensityMatrix4 x_state(const XStateParams& p) {
    check_x_params(p);
    Matrix4c m;
    m(0, 0) = p.d0;
    m(1, 1) = p.d1;
    m(2, 2) = p.d2;
    m(3, 3) = p.d3;
    m(0, 3) = p.a03;
    m(3, 0) = std::conj(p.a03);
    m(1, 2) = p.a12;
    m(2, 1) = std::conj(p.a12);
    return validate_density(m);
}

/// True when every entry off the diagonal and antidiagonal vanishes within tol.
inline bool is_x_shaped(const Matrix4c& m, double tol = tol_herm) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && i + j != 3 && std::abs(m(i, j)) > tol) return false;
    return true;
}

/// Reads the X-state parameters off a state that has X shape.
inline XStateParams x_params_of(const DensityMatrix4& rho) {
    if (!is_x_shaped(rho.matrix())) throw std::invalid_argument("state is not an X state");
    return {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(), rho(0, 3), rho(1, 2)};
}

/// U^dagger rho U with U = exp(-i theta1 s_z) (x) exp(-i theta2 s_z).
inline Matrix4c apply_local_phase_rotation(const Matrix4c& rho, double theta1, double theta2) {
    // U is diagonal: U_kk = exp(-i (s1 theta1 + s2 theta2)), s = +1 for |0>, -1 for |1>.
    std::array<Complex, 4> u;
    for (std::size_t k = 0; k < 4; ++k) {
        const double s1 = (k & 2) ? -1.0 : 1.0;
        const double s2 = (k & 1) ? -1.0 : 1.0;
        u[k] = std::polar(1.0, -(s1 * theta1 + s2 * theta2));
    }
    Matrix4c out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = std::conj(u[i]) * rho(i, j) * u[j];
    return out;
}

struct PhaseNormalization {
    double theta1 = 0.0;
    double theta2 = 0.0;
    XStateParams normalized;
};

/// Local z-rotation angles that make both antidiagonals real and
/// nonnegative: theta1 = -(arg rho_03 + arg rho_12)/4,
/// theta2 = -(arg rho_03 - arg rho_12)/4. A zero entry counts as phase 0.
inline PhaseNormalization normalize_x_phases(const XStateParams& p) {
    check_x_params(p);
    const double arg03 = p.a03 == Complex{} ? 0.0 : std::arg(p.a03);
    const double arg12 = p.a12 == Complex{} ? 0.0 : std::arg(p.a12);
    PhaseNormalization out;
    out.theta1 = -(arg03 + arg12) / 4.0;
    out.theta2 = -(arg03 - arg12) / 4.0;
    out.normalized = p;
    out.normalized.a03 = std::abs(p.a03);
    out.normalized.a12 = std::abs(p.a12);
    return out;
}

// Example families. Parameters follow the usual mixture conventions.

/// a |phi+><phi+| + (1 - a) |11><11|, a in (0, 1].
inline XStateParams example1(double a) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("example1 needs a in (0, 1]");
    return {a / 2.0, 0.0, 0.0, 1.0 - a / 2.0, a / 2.0, 0.0};
}

/// a |psi+><psi+| + (1 - a) |11><11|, a in [0, 1].
inline XStateParams example2(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("example2 needs a in [0, 1]");
    return {0.0, a / 2.0, a / 2.0, 1.0 - a, 0.0, a / 2.0};
}

/// [(1 - a) |00><00| + 2 |psi+><psi+| + a |11><11|] / 3, a in [0, 1].
inline XStateParams example3(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("example3 needs a in [0, 1]");
    return {(1.0 - a) / 3.0, 1.0 / 3.0, 1.0 / 3.0, a / 3.0, 0.0, 1.0 / 3.0};
}

inline constexpr double tol_amplitude_norm = 1e-12;

/// Amplitudes of the two-atom Tavis-Cummings evolution from
/// (alpha|00> + beta|11>)|0_cavity>:
///   c1 -> |00>|2>, c2 -> |+>|1>, c3 -> |11>|0>, c4 -> |00>|0>.
struct TCAmplitudes {
    Complex c1, c2, c3, c4;

    double norm2() const { return std::norm(c1) + std::norm(c2) + std::norm(c3) + std::norm(c4); }
};

/// gt is the dimensionless coupling-time product g*t.
inline TCAmplitudes tc_amplitudes(double alpha, double beta, double gt) {
    if (std::abs(alpha * alpha + beta * beta - 1.0) > tol_amplitude_norm)
        throw DomainError("tc_amplitudes needs alpha^2 + beta^2 = 1");
    if (!(gt >= 0.0) || !std::isfinite(gt)) throw DomainError("tc_amplitudes needs finite gt >= 0");
    const double w = std::sqrt(6.0) * gt;
    const double c = std::cos(w);
    const double s = std::sin(w);
    TCAmplitudes out;
    out.c1 = -(std::sqrt(2.0) / 3.0) * beta * (1.0 - c);
    out.c2 = Complex{0.0, -beta / std::sqrt(3.0)} * s;
    out.c3 = beta * (1.0 + (c - 1.0) / 3.0);
    out.c4 = alpha;
    return out;
}

/// Reduced two-atom state of the Tavis-Cummings evolution.
inline XStateParams example4(double alpha, double beta, double gt) {
    const TCAmplitudes amp = tc_amplitudes(alpha, beta, gt);
    const double p1 = std::norm(amp.c1);
    const double p2 = std::norm(amp.c2);
    const double p3 = std::norm(amp.c3);
    const double p4 = std::norm(amp.c4);
    return {p1 + p4, p2 / 2.0, p2 / 2.0, p3, std::abs(amp.c3 * amp.c4), p2 / 2.0};
}

/// tau = sqrt(6) g t / (2 pi); the Tavis-Cummings dynamics has period 1 in tau.
inline double tc_gt_from_tau(double tau) { return 2.0 * std::numbers::pi * tau / std::sqrt(6.0); }

/// Amplitudes for two atoms decaying into a common vacuum reservoir from
/// (alpha|gg> + beta|ee>)|0>, beta = sqrt(1 - alpha^2):
///   c1 = beta e^{-gt}, c2 = beta sqrt(2 gt) e^{-gt}, c3 = sqrt(1 - alpha^2 - c1^2 - c2^2).
struct ReservoirAmplitudes {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    double alpha = 0.0;

    double norm2() const { return alpha * alpha + c1 * c1 + c2 * c2 + c3 * c3; }
};

inline constexpr double tol_reservoir_sqrt = 1e-14;

/// gt is the dimensionless decay-time product gamma*t.
inline ReservoirAmplitudes reservoir_amplitudes(double alpha, double gt) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("reservoir_amplitudes needs alpha in [0, 1]");
    if (!(gt >= 0.0) || !std::isfinite(gt)) throw DomainError("reservoir_amplitudes needs finite gamma*t >= 0");
    const double beta = std::sqrt(1.0 - alpha * alpha);
    const double decay = std::exp(-gt);
    ReservoirAmplitudes out;
    out.alpha = alpha;
    out.c1 = beta * decay;
    out.c2 = beta * std::sqrt(2.0 * gt) * decay;
    double rest = 1.0 - alpha * alpha - out.c1 * out.c1 - out.c2 * out.c2;
    if (rest < 0.0) {
        if (rest < -tol_reservoir_sqrt) throw DomainError("reservoir amplitudes lost normalization");
        rest = 0.0;
    }
    out.c3 = std::sqrt(rest);
    return out;
}

inline XStateParams example5(double alpha, double gt) {
    const ReservoirAmplitudes r = reservoir_amplitudes(alpha, gt);
    const double half = r.c2 * r.c2 / 2.0;
    return {alpha * alpha + r.c3 * r.c3, half, half, r.c1 * r.c1, alpha * r.c1, half};
}

enum class ExampleId { ex1, ex2, ex3 };
enum class MeasureKind { gd, ggqd };

/// Published closed-form curves of the first three example families; test
/// fixtures only.
inline double example_reference(ExampleId id, MeasureKind measure, double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("example_reference needs a in [0, 1]");
    switch (id) {
        case ExampleId::ex1: return a * a / 2.0;
        case ExampleId::ex2:
            if (measure == MeasureKind::ggqd) return a <= 0.6 ? a * a / 2.0 : (3.0 - 8.0 * a + 7.0 * a * a) / 4.0;
            return a <= 0.5 ? a * a / 2.0 : (1.0 - 3.0 * a + 3.0 * a * a) / 2.0;
        case ExampleId::ex3:
            if (measure == MeasureKind::ggqd) return (7.0 - 8.0 * a + 8.0 * a * a) / 36.0;
            return (3.0 - 2.0 * a + 2.0 * a * a) / 18.0;
    }
    throw DomainError("unknown example");
}

}  // namespace gqd
