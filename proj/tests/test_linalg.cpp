#include <gtest/gtest.h>

#include <random>

#include "gqd/linalg.hpp"

using namespace gqd;

namespace {

Mat3 random_symmetric(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

Matrix4c random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix4c m;
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) = u(rng);
        for (std::size_t j = i + 1; j < 4; ++j) {
            m(i, j) = Complex{u(rng), u(rng)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

}  // namespace

TEST(Linalg, MatrixProductAndTranspose) {
    RealMatrix<2, 3> a;
    a.data = {1, 2, 3, 4, 5, 6};
    const RealMatrix<2, 2> g = a * transpose(a);
    EXPECT_DOUBLE_EQ(g(0, 0), 14.0);
    EXPECT_DOUBLE_EQ(g(0, 1), 32.0);
    EXPECT_DOUBLE_EQ(g(1, 1), 77.0);
    EXPECT_DOUBLE_EQ(trace(g), 91.0);
    EXPECT_DOUBLE_EQ(frobenius2(a), 91.0);
}

TEST(Linalg, CrossProductIsOrthogonal) {
    const Vec3 a{1.0, 2.0, 3.0}, b{-0.5, 4.0, 0.25};
    const Vec3 c = cross(a, b);
    EXPECT_NEAR(dot(a, c), 0.0, 1e-14);
    EXPECT_NEAR(dot(b, c), 0.0, 1e-14);
}

TEST(Linalg, HermitianEigenvaluesOfKnownMatrix) {
    const Matrix2c sx{{{0.0, 1.0}, {1.0, 0.0}}};
    const Matrix2c sz{{{1.0, 0.0}, {0.0, -1.0}}};
    const Matrix4c m = kron(sx, sx) + kron(sz, sz);  // eigenvalues -2, 0, 0, 2
    const auto ev = hermitian_eigenvalues(m);
    EXPECT_NEAR(ev[0], -2.0, 1e-13);
    EXPECT_NEAR(ev[1], 0.0, 1e-13);
    EXPECT_NEAR(ev[2], 0.0, 1e-13);
    EXPECT_NEAR(ev[3], 2.0, 1e-13);
}

TEST(Linalg, HermitianEigenvaluesPreserveTraceInvariants) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix4c m = random_hermitian(rng);
        const auto ev = hermitian_eigenvalues(m);
        double s1 = 0.0, s2 = 0.0;
        for (double v : ev) {
            s1 += v;
            s2 += v * v;
        }
        EXPECT_NEAR(s1, trace(m).real(), 1e-12);
        EXPECT_NEAR(s2, trace(m * m).real(), 1e-12);
        EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    }
}

TEST(Linalg, SymmetricEigen3Reconstructs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat3 m = random_symmetric(rng);
        const auto e = symmetric_eigen3(m);
        EXPECT_GE(e.values[0], e.values[1]);
        EXPECT_GE(e.values[1], e.values[2]);
        for (std::size_t k = 0; k < 3; ++k) {
            const Vec3 mv = m * e.vectors[k];
            for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(mv[i], e.values[k] * e.vectors[k][i], 1e-12);
            EXPECT_NEAR(norm2(e.vectors[k]), 1.0, 1e-13);
        }
    }
}

TEST(Linalg, LargestEigenvalue3MatchesJacobi) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const Mat3 m = random_symmetric(rng);
        EXPECT_NEAR(largest_eigenvalue3(m), symmetric_eigen3(m).values[0], 1e-12);
    }
}

TEST(Linalg, LargestEigenvalue3DegenerateSpectra) {
    EXPECT_DOUBLE_EQ(largest_eigenvalue3(Mat3::identity()), 1.0);
    EXPECT_DOUBLE_EQ(largest_eigenvalue3(Mat3::diagonal({0.3, 0.3, -1.0})), 0.3);
    EXPECT_DOUBLE_EQ(largest_eigenvalue3(Mat3{}), 0.0);
    // Rank one v v^t has top eigenvalue |v|^2 and a doubly degenerate zero.
    const Vec3 v{0.3, -0.4, 1.2};
    EXPECT_NEAR(largest_eigenvalue3(outer(v, v)), norm2(v), 1e-14);
    // Two equal top eigenvalues after a rotation.
    const double c = std::cos(0.7), s = std::sin(0.7);
    Mat3 r = Mat3::identity();
    r(0, 0) = c, r(0, 1) = -s, r(1, 0) = s, r(1, 1) = c;
    const Mat3 m = r * Mat3::diagonal({2.0, 2.0, 0.5}) * transpose(r);
    EXPECT_NEAR(largest_eigenvalue3(m), 2.0, 1e-14);
}
