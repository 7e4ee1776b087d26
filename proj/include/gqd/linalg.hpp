// Fixed-size real and complex matrices for two-qubit work, plus the two
// eigen-solvers the rest of the library leans on: a cyclic Jacobi iteration
// for 4x4 Hermitian matrices and a closed-form 3x3 symmetric solver.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

namespace gqd {

using Complex = std::complex<double>;

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm2(const Vec3& a) { return dot(a, a); }

inline Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Real NxM matrix stored row-major.
template <std::size_t R, std::size_t C>
struct RealMatrix {
    std::array<double, R * C> data{};

    static constexpr std::size_t rows() { return R; }
    static constexpr std::size_t cols() { return C; }

    double& operator()(std::size_t i, std::size_t j) { return data[i * C + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * C + j]; }

    static RealMatrix identity() requires(R == C) {
        RealMatrix m;
        for (std::size_t i = 0; i < R; ++i) m(i, i) = 1.0;
        return m;
    }

    static RealMatrix diagonal(const std::array<double, R>& d) requires(R == C) {
        RealMatrix m;
        for (std::size_t i = 0; i < R; ++i) m(i, i) = d[i];
        return m;
    }
};

using Mat3 = RealMatrix<3, 3>;

template <std::size_t R, std::size_t K, std::size_t C>
RealMatrix<R, C> operator*(const RealMatrix<R, K>& a, const RealMatrix<K, C>& b) {
    RealMatrix<R, C> out;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t k = 0; k < K; ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < C; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

template <std::size_t R, std::size_t C>
RealMatrix<C, R> transpose(const RealMatrix<R, C>& a) {
    RealMatrix<C, R> out;
    for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) out(j, i) = a(i, j);
    return out;
}

template <std::size_t N>
double trace(const RealMatrix<N, N>& a) {
    double t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += a(i, i);
    return t;
}

/// Squared Frobenius norm.
template <std::size_t R, std::size_t C>
double frobenius2(const RealMatrix<R, C>& a) {
    double s = 0.0;
    for (double v : a.data) s += v * v;
    return s;
}

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}

/// v^t M, i.e. M^t v.
inline Vec3 transpose_times(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v[0] + m(1, 0) * v[1] + m(2, 0) * v[2],
            m(0, 1) * v[0] + m(1, 1) * v[1] + m(2, 1) * v[2],
            m(0, 2) * v[0] + m(1, 2) * v[1] + m(2, 2) * v[2]};
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = a[i] * b[j];
    return m;
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 m;
    for (std::size_t k = 0; k < 9; ++k) m.data[k] = a.data[k] + b.data[k];
    return m;
}

/// Complex 4x4 matrix, row-major, in the basis |00>,|01>,|10>,|11>.
struct Matrix4c {
    std::array<Complex, 16> data{};

    Complex& operator()(std::size_t i, std::size_t j) { return data[i * 4 + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data[i * 4 + j]; }

    static Matrix4c identity() {
        Matrix4c m;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    friend bool operator==(const Matrix4c&, const Matrix4c&) = default;
};

using Matrix2c = std::array<std::array<Complex, 2>, 2>;

inline Matrix4c operator*(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < 4; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline Matrix4c operator+(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c out;
    for (std::size_t k = 0; k < 16; ++k) out.data[k] = a.data[k] + b.data[k];
    return out;
}

inline Matrix4c operator*(double s, const Matrix4c& a) {
    Matrix4c out;
    for (std::size_t k = 0; k < 16; ++k) out.data[k] = s * a.data[k];
    return out;
}

inline Matrix4c adjoint(const Matrix4c& a) {
    Matrix4c out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

inline Complex trace(const Matrix4c& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a[i][j] * b[k][l];
    return out;
}

inline double max_abs_difference(const Matrix4c& a, const Matrix4c& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < 16; ++k) m = std::max(m, std::abs(a.data[k] - b.data[k]));
    return m;
}

namespace detail {

inline double offdiagonal_norm(const Matrix4c& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

/// Eigenvalues of a Hermitian 4x4 matrix in ascending order.
///
/// Cyclic Jacobi: each (p, q) pivot first has the phase of a_pq absorbed into
/// column q, then a real Givens rotation zeroes it. Iterates until the
/// off-diagonal Frobenius norm drops below `tol`.
inline std::array<double, 4> hermitian_eigenvalues(Matrix4c a, double tol = 1e-13,
                                                   int max_sweeps = 64) {
    for (int sweep = 0; sweep < max_sweeps && detail::offdiagonal_norm(a) >= tol; ++sweep) {
        for (std::size_t p = 0; p < 3; ++p) {
            for (std::size_t q = p + 1; q < 4; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                const Complex phase = a(p, q) / mag;  // e^{i alpha}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U = diag-phase * rotation acting on (p, q):
                //   U_pp = c, U_pq = s, U_qp = -s e^{-i alpha}, U_qq = c e^{-i alpha}
                const Complex upp = c;
                const Complex upq = s;
                const Complex uqp = -s * std::conj(phase);
                const Complex uqq = c * std::conj(phase);
                // a <- a U (columns p, q)
                for (std::size_t k = 0; k < 4; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                // a <- U^dagger a (rows p, q)
                for (std::size_t k = 0; k < 4; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    std::array<double, 4> ev{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(ev.begin(), ev.end());
    return ev;
}

struct SymmetricEigen3 {
    std::array<double, 3> values;  // descending
    std::array<Vec3, 3> vectors;   // vectors[k] pairs with values[k]
};

/// Full eigendecomposition of a real symmetric 3x3 matrix by cyclic Jacobi.
inline SymmetricEigen3 symmetric_eigen3(Mat3 a, double tol = 1e-15, int max_sweeps = 64) {
    Mat3 v = Mat3::identity();
    auto off = [&a] { return a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2); };
    double scale = 0.0;
    for (double x : a.data) scale = std::max(scale, std::abs(x));
    const double threshold = tol * tol * std::max(scale * scale, 1e-300);
    for (int sweep = 0; sweep < max_sweeps && off() > threshold; ++sweep) {
        for (std::size_t p = 0; p < 2; ++p) {
            for (std::size_t q = p + 1; q < 3; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < 3; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < 3; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    SymmetricEigen3 out{};
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t i = order[k];
        out.values[k] = a(i, i);
        out.vectors[k] = {v(0, i), v(1, i), v(2, i)};
    }
    return out;
}

/// Largest eigenvalue of a real symmetric 3x3 matrix.
///
/// Trigonometric solution of the characteristic cubic. When the top of the
/// spectrum is nearly degenerate (1 - r^2 below `degeneracy_tol`, r the
/// normalized half-determinant) acos loses precision and Jacobi takes over.
inline double largest_eigenvalue3(const Mat3& m, double degeneracy_tol = 1e-8) {
    const double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    if (p1 == 0.0) return std::max({m(0, 0), m(1, 1), m(2, 2)});
    const double q = (m(0, 0) + m(1, 1) + m(2, 2)) / 3.0;
    const double d0 = m(0, 0) - q;
    const double d1 = m(1, 1) - q;
    const double d2 = m(2, 2) - q;
    const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // B = (M - qI) / p
    const double b00 = d0 / p, b11 = d1 / p, b22 = d2 / p;
    const double b01 = m(0, 1) / p, b02 = m(0, 2) / p, b12 = m(1, 2) / p;
    const double det = b00 * (b11 * b22 - b12 * b12) - b01 * (b01 * b22 - b12 * b02) + b02 * (b01 * b12 - b11 * b02);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    if (1.0 - r * r < degeneracy_tol) return symmetric_eigen3(m).values[0];
    const double phi = std::acos(r) / 3.0;
    return q + 2.0 * p * std::cos(phi);
}

}  // namespace gqd
