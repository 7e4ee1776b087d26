// Two-qubit density matrices, their Pauli (Bloch) decomposition and
// one- or two-sided von Neumann measurement maps.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gqd/linalg.hpp"

namespace gqd {

inline constexpr double tol_herm = 1e-12;
inline constexpr double tol_trace = 1e-12;
inline constexpr double tol_psd = 1e-10;
inline constexpr double tol_bloch = 1e-10;
inline constexpr double tol_axis = 1e-12;
/// Largest imaginary residue tolerated in a Pauli expectation value.
inline constexpr double tol_bloch_imag = 1e-12;

struct Violation {
    enum class Kind { NonFinite, NotHermitian, TraceNotOne, NotPSD, NegativeProbability, BlochImaginary };
    Kind kind;
    double magnitude;
};

inline const char* to_string(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::NonFinite: return "NonFinite";
        case Violation::Kind::NotHermitian: return "NotHermitian";
        case Violation::Kind::TraceNotOne: return "TraceNotOne";
        case Violation::Kind::NotPSD: return "NotPSD";
        case Violation::Kind::NegativeProbability: return "NegativeProbability";
        case Violation::Kind::BlochImaginary: return "BlochImaginary";
    }
    return "Unknown";
}

/// Raised when an input fails one or more state invariants. Every violated
/// invariant is listed together with its measured deviation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

    bool has(Violation::Kind k) const noexcept {
        for (const auto& v : violations_)
            if (v.kind == k) return true;
        return false;
    }

private:
    static std::string describe(const std::vector<Violation>& vs) {
        std::ostringstream os;
        os << "invalid state:";
        for (const auto& v : vs) os << ' ' << to_string(v.kind) << "(deviation " << v.magnitude << ')';
        return os.str();
    }

    std::vector<Violation> violations_;
};

class ReconstructionNotPSD : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DensityMatrix4;
DensityMatrix4 validate_density(const Matrix4c& m);

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
/// Only obtainable through validate_density.
class DensityMatrix4 {
public:
    const Matrix4c& matrix() const noexcept { return m_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend bool operator==(const DensityMatrix4&, const DensityMatrix4&) = default;

private:
    explicit DensityMatrix4(const Matrix4c& m) : m_(m) {}
    friend DensityMatrix4 validate_density(const Matrix4c& m);

    Matrix4c m_;
};

/// Lists every violated invariant of a candidate state (empty when valid).
inline std::vector<Violation> diagnose_density(const Matrix4c& m) {
    std::vector<Violation> out;
    for (const auto& z : m.data)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            out.push_back({Violation::Kind::NonFinite, std::numeric_limits<double>::infinity()});
            return out;
        }
    double herm = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) herm = std::max(herm, std::abs(m(i, j) - std::conj(m(j, i))));
    if (herm > tol_herm) out.push_back({Violation::Kind::NotHermitian, herm});

    double negative = 0.0;
    for (std::size_t i = 0; i < 4; ++i) negative = std::max(negative, -m(i, i).real());
    if (negative > tol_psd) out.push_back({Violation::Kind::NegativeProbability, negative});

    const Complex tr = trace(m);
    const double trace_dev = std::abs(tr - Complex{1.0, 0.0});
    if (trace_dev > tol_trace) out.push_back({Violation::Kind::TraceNotOne, trace_dev});

    // Eigenvalues of the Hermitian part; for an input that is already
    // Hermitian this is the matrix itself.
    Matrix4c h;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    const double smallest = hermitian_eigenvalues(h)[0];
    if (smallest < -tol_psd) out.push_back({Violation::Kind::NotPSD, -smallest});
    return out;
}

inline DensityMatrix4 validate_density(const Matrix4c& m) {
    auto violations = diagnose_density(m);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return DensityMatrix4(m);
}

inline DensityMatrix4 maximally_mixed() { return validate_density(0.25 * Matrix4c::identity()); }

/// Local Bloch vectors and correlation matrix:
///   x_i = tr rho (s_i x I),  y_j = tr rho (I x s_j),  T_ij = tr rho (s_i x s_j).
struct BlochForm {
    Vec3 x{};
    Vec3 y{};
    Mat3 t{};

    /// The 4x4 real coefficient matrix C = (1/2) [[1, y^t], [x, T]].
    RealMatrix<4, 4> coefficient_matrix() const {
        RealMatrix<4, 4> c;
        c(0, 0) = 0.5;
        for (std::size_t j = 0; j < 3; ++j) c(0, j + 1) = 0.5 * y[j];
        for (std::size_t i = 0; i < 3; ++i) {
            c(i + 1, 0) = 0.5 * x[i];
            for (std::size_t j = 0; j < 3; ++j) c(i + 1, j + 1) = 0.5 * t(i, j);
        }
        return c;
    }

    /// (1 + |x|^2 + |y|^2 + |T|^2) / 4, which equals tr(rho^2).
    double purity() const { return 0.25 * (1.0 + norm2(x) + norm2(y) + frobenius2(t)); }
};

namespace pauli {

inline Matrix2c identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
inline Matrix2c x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Matrix2c y() { return {{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}}}; }
inline Matrix2c z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

/// s_0 = I, s_1 = X, s_2 = Y, s_3 = Z.
inline Matrix2c sigma(std::size_t k) {
    switch (k) {
        case 0: return identity();
        case 1: return x();
        case 2: return y();
        default: return z();
    }
}

}  // namespace pauli

/// tr(rho (s_alpha x s_beta)) for alpha, beta in 0..3, written out in terms
/// of matrix entries. Returns the full complex value; callers decide what to
/// do with the imaginary residue.
inline Complex pauli_expectation(const Matrix4c& m, std::size_t alpha, std::size_t beta) {
    const Matrix2c a = pauli::sigma(alpha);
    const Matrix2c b = pauli::sigma(beta);
    // tr(rho K) = sum_{ij} rho_ij K_ji with K = a (x) b.
    Complex s{};
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 2; ++j2) {
                    const Complex k = a[j1][i1] * b[j2][i2];
                    if (k != Complex{}) s += m(2 * i1 + i2, 2 * j1 + j2) * k;
                }
    return s;
}

/// Pauli decomposition. Imaginary residues above tol_bloch_imag are treated
/// as corrupted input and rejected.
inline BlochForm bloch_decompose(const DensityMatrix4& rho) {
    BlochForm b;
    double worst_imag = 0.0;
    auto take = [&](std::size_t alpha, std::size_t beta) {
        const Complex v = pauli_expectation(rho.matrix(), alpha, beta);
        worst_imag = std::max(worst_imag, std::abs(v.imag()));
        return v.real();
    };
    for (std::size_t i = 0; i < 3; ++i) {
        b.x[i] = take(i + 1, 0);
        b.y[i] = take(0, i + 1);
        for (std::size_t j = 0; j < 3; ++j) b.t(i, j) = take(i + 1, j + 1);
    }
    if (worst_imag > tol_bloch_imag) throw ValidationError({{Violation::Kind::BlochImaginary, worst_imag}});
    return b;
}

/// rho = (1/4) sum_{alpha beta} c_{alpha beta} s_alpha x s_beta with
/// c_00 = 1, c_i0 = x_i, c_0j = y_j, c_ij = T_ij.
inline DensityMatrix4 reconstruct(const BlochForm& b) {
    Matrix4c m;
    for (std::size_t alpha = 0; alpha < 4; ++alpha)
        for (std::size_t beta = 0; beta < 4; ++beta) {
            double c = 0.0;
            if (alpha == 0 && beta == 0) c = 1.0;
            else if (beta == 0) c = b.x[alpha - 1];
            else if (alpha == 0) c = b.y[beta - 1];
            else c = b.t(alpha - 1, beta - 1);
            if (c == 0.0) continue;
            const Matrix4c k = kron(pauli::sigma(alpha), pauli::sigma(beta));
            for (std::size_t n = 0; n < 16; ++n) m.data[n] += (0.25 * c) * k.data[n];
        }
    // The Pauli basis is Hermitian, so enforce exact conjugate symmetry on
    // the accumulated sums.
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) m(j, i) = std::conj(m(i, j));
    }
    auto violations = diagnose_density(m);
    if (!violations.empty()) throw ReconstructionNotPSD(std::move(violations));
    return validate_density(m);
}

/// Unit vector in R^3 defining the projector pair (I +- n.s)/2.
class MeasurementAxis {
public:
    /// Requires |n| = 1 within tol_axis.
    explicit MeasurementAxis(const Vec3& n) : n_(n) {
        const double len = std::sqrt(norm2(n));
        if (!std::isfinite(len) || std::abs(len - 1.0) > tol_axis)
            throw std::invalid_argument("measurement axis must be a unit vector");
    }

    /// Normalizes any nonzero vector.
    static MeasurementAxis along(const Vec3& v) {
        const double len = std::sqrt(norm2(v));
        if (!(len > 0.0) || !std::isfinite(len)) throw std::invalid_argument("measurement axis needs a nonzero direction");
        return MeasurementAxis(scaled(v, 1.0 / len));
    }

    static MeasurementAxis from_angles(double theta, double phi) {
        return MeasurementAxis::along({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)});
    }

    const Vec3& vector() const noexcept { return n_; }
    double operator[](std::size_t i) const { return n_[i]; }

    /// (I + sign * n.s) / 2
    Matrix2c projector(int sign) const {
        const double s = sign >= 0 ? 0.5 : -0.5;
        return {{{0.5 + s * n_[2], s * Complex{n_[0], -n_[1]}}, {s * Complex{n_[0], n_[1]}, 0.5 - s * n_[2]}}};
    }

private:
    Vec3 n_;
};

/// sum_{k,l} (P_k x Q_l) rho (P_k x Q_l); an absent axis acts as the identity
/// on that side.
inline DensityMatrix4 apply_measurement(const DensityMatrix4& rho, const std::optional<MeasurementAxis>& a,
                                        const std::optional<MeasurementAxis>& b) {
    if (!a && !b) throw std::invalid_argument("apply_measurement needs at least one axis");
    std::vector<Matrix2c> side_a;
    std::vector<Matrix2c> side_b;
    if (a) side_a = {a->projector(+1), a->projector(-1)};
    else side_a = {pauli::identity()};
    if (b) side_b = {b->projector(+1), b->projector(-1)};
    else side_b = {pauli::identity()};

    Matrix4c out;
    for (const auto& pa : side_a)
        for (const auto& pb : side_b) {
            const Matrix4c proj = kron(pa, pb);
            out = out + proj * rho.matrix() * proj;
        }
    for (std::size_t i = 0; i < 4; ++i) {
        out(i, i) = out(i, i).real();
        for (std::size_t j = i + 1; j < 4; ++j) out(j, i) = std::conj(out(i, j));
    }
    return validate_density(out);
}

/// tr(rho^2) as the sum of squared moduli of the entries.
inline double purity(const DensityMatrix4& rho) {
    double s = 0.0;
    for (const auto& z : rho.matrix().data) s += std::norm(z);
    return s;
}

inline Matrix4c swap_subsystems(const Matrix4c& m) {
    static constexpr std::array<std::size_t, 4> perm{0, 2, 1, 3};
    Matrix4c out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(perm[i], perm[j]) = m(i, j);
    return out;
}

inline DensityMatrix4 swap_subsystems(const DensityMatrix4& rho) { return validate_density(swap_subsystems(rho.matrix())); }

}  // namespace gqd
