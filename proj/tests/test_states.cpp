#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "gqd/measures.hpp"
#include "gqd/random.hpp"
#include "gqd/states.hpp"

using namespace gqd;

namespace {

// exp(-i H t) |ee,0> by Taylor series, H = g [[0, r2, 0], [r2, 0, 2], [0, 2, 0]]
// in the basis |ee,0>, |+,1>, |gg,2>.
std::array<Complex, 3> propagate_cavity(double gt) {
    const double r2 = std::sqrt(2.0);
    const double h[3][3] = {{0, r2, 0}, {r2, 0, 2}, {0, 2, 0}};
    std::array<Complex, 3> term{1.0, 0.0, 0.0}, sum = term;
    for (int k = 1; k < 200; ++k) {
        std::array<Complex, 3> next{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) next[i] += h[i][j] * term[j];
        for (auto& z : next) z *= Complex{0.0, -gt} / static_cast<double>(k);
        term = next;
        for (int i = 0; i < 3; ++i) sum[i] += term[i];
    }
    return sum;
}

}  // namespace

TEST(XState, BuildsAndReadsBack) {
    const XStateParams p{0.35, 0.3, 0.2, 0.15, Complex{0.05, 0.02}, Complex{-0.03, 0.04}};
    const DensityMatrix4 rho = x_state(p);
    EXPECT_TRUE(is_x_shaped(rho.matrix()));
    const XStateParams q = x_params_of(rho);
    EXPECT_EQ(q.d0, p.d0);
    EXPECT_EQ(q.a03, p.a03);
    EXPECT_EQ(q.a12, p.a12);
    EXPECT_EQ(rho(3, 0), std::conj(p.a03));
    try {
        x_state({0.25, 0.25, 0.25, 0.25, 0.3, 0.0});
        FAIL() << "expected NotPSD";
    } catch (const ValidationError& e) {
        EXPECT_TRUE(e.has(Violation::Kind::NotPSD));
    }

    StateSampler sampler(1);
    EXPECT_FALSE(is_x_shaped(sampler.density().matrix()));
    EXPECT_THROW(x_params_of(sampler.density()), std::invalid_argument);
}

TEST(PhaseNormalization, LocalRotationRealizesNormalizedState) {
    StateSampler sampler(31);
    for (int trial = 0; trial < 500; ++trial) {
        const XStateParams p = sampler.x_params();
        const PhaseNormalization n = normalize_x_phases(p);
        const Matrix4c rotated = apply_local_phase_rotation(x_state(p).matrix(), n.theta1, n.theta2);
        EXPECT_LE(max_abs_difference(rotated, x_state(n.normalized).matrix()), 1e-15);
        EXPECT_GE(n.normalized.a03.real(), 0.0);
        EXPECT_EQ(n.normalized.a03.imag(), 0.0);
    }
}

TEST(PhaseNormalization, MeasuresAreInvariant) {
    StateSampler sampler(32);
    for (int trial = 0; trial < 10; ++trial) {
        const XStateParams p = sampler.x_params();
        const XStateParams n = normalize_x_phases(p).normalized;
        EXPECT_NEAR(gd_dakic(x_state(p)).value, gd_x(n).value, 1e-12);
        EXPECT_NEAR(ggqd_general(x_state(p)).value, ggqd_x(n).value, 1e-8);
    }
}

TEST(Examples, DomainsAreEnforced) {
    EXPECT_THROW(example1(0.0), DomainError);
    EXPECT_THROW(example1(1.01), DomainError);
    EXPECT_THROW(example2(-0.1), DomainError);
    EXPECT_THROW(example3(1.5), DomainError);
    EXPECT_THROW(tc_amplitudes(0.6, 0.6, 1.0), DomainError);
    EXPECT_THROW(tc_amplitudes(0.6, 0.8, -1.0), DomainError);
    EXPECT_THROW(reservoir_amplitudes(1.2, 1.0), DomainError);
    EXPECT_THROW(reservoir_amplitudes(0.1, -0.5), DomainError);
    EXPECT_THROW(example_reference(ExampleId::ex1, MeasureKind::gd, 1.2), DomainError);
}

TEST(Examples, FamiliesAreValidStates) {
    for (int i = 1; i <= 100; ++i) {
        const double a = i / 100.0;
        EXPECT_NO_THROW(x_state(example1(a)));
        EXPECT_NO_THROW(x_state(example2(a)));
        EXPECT_NO_THROW(x_state(example3(a)));
        EXPECT_NO_THROW(x_state(example4(std::sqrt(0.5), std::sqrt(0.5), 3.0 * a)));
        EXPECT_NO_THROW(x_state(example5(0.1, 10.0 * a)));
    }
    const XStateParams bell = example1(1.0);
    EXPECT_EQ(bell.d0, 0.5);
    EXPECT_EQ(bell.d3, 0.5);
    EXPECT_EQ(bell.a03, Complex{0.5});
}

TEST(TavisCummings, AmplitudesAtHalfPeriod) {
    const double s = std::sqrt(0.5);
    const TCAmplitudes amp = tc_amplitudes(s, s, std::numbers::pi / std::sqrt(6.0));
    EXPECT_NEAR(amp.c1.real(), -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(std::abs(amp.c2), 0.0, 1e-15);
    EXPECT_NEAR(amp.c3.real(), 1.0 / (3.0 * std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(amp.c4.real(), s, 1e-15);
    EXPECT_NEAR(amp.norm2(), 1.0, 1e-15);
}

TEST(TavisCummings, AmplitudesMatchDirectPropagation) {
    for (int k = 0; k <= 30; ++k) {
        const double gt = 0.1 * k;
        const auto psi = propagate_cavity(gt);
        const TCAmplitudes amp = tc_amplitudes(0.0, 1.0, gt);
        EXPECT_NEAR(std::abs(amp.c3), std::abs(psi[0]), 1e-12);
        EXPECT_NEAR(std::abs(amp.c2), std::abs(psi[1]), 1e-12);
        EXPECT_NEAR(std::abs(amp.c1), std::abs(psi[2]), 1e-12);
    }
}

TEST(TavisCummings, ReducedStateMatchesPartialTrace) {
    const double alpha = 0.6, beta = 0.8;
    for (int k = 0; k <= 20; ++k) {
        const double gt = 0.15 * k;
        const TCAmplitudes amp = tc_amplitudes(alpha, beta, gt);
        // Trace out the cavity by hand: photon number 0 keeps alpha|gg> + c3|ee>.
        const double p00 = std::norm(amp.c4) + std::norm(amp.c1);
        const double p11 = std::norm(amp.c3);
        const double half = std::norm(amp.c2) / 2.0;
        const XStateParams p = example4(alpha, beta, gt);
        EXPECT_NEAR(p.d0, p00, 1e-15);
        EXPECT_NEAR(p.d1, half, 1e-15);
        EXPECT_NEAR(p.d3, p11, 1e-15);
        EXPECT_NEAR(p.a12.real(), half, 1e-15);
        EXPECT_NEAR(p.a03.real(), std::abs(amp.c4 * std::conj(amp.c3)), 1e-15);
        EXPECT_NEAR(p.d0 + p.d1 + p.d2 + p.d3, 1.0, 1e-14);
    }
    EXPECT_NEAR(std::sqrt(6.0) * tc_gt_from_tau(1.0), 2.0 * std::numbers::pi, 1e-14);
}

TEST(Reservoir, AmplitudesAtUnitTime) {
    const ReservoirAmplitudes r = reservoir_amplitudes(0.1, 1.0);
    const double beta2 = 0.99;
    const double e2 = std::exp(-2.0);
    EXPECT_NEAR(r.c1 * r.c1, beta2 * e2, 1e-15);
    EXPECT_NEAR(r.c2 * r.c2, 2.0 * beta2 * e2, 1e-15);
    EXPECT_NEAR(r.c3 * r.c3, beta2 * (1.0 - 3.0 * e2), 1e-15);
    EXPECT_NEAR(r.norm2(), 1.0, 1e-15);
}

TEST(Reservoir, InitialStateIsPureEntangled) {
    const XStateParams p = example5(0.1, 0.0);
    EXPECT_NEAR(p.d0, 0.01, 1e-15);
    EXPECT_NEAR(p.d3, 0.99, 1e-15);
    EXPECT_NEAR(p.a03.real(), 0.1 * std::sqrt(0.99), 1e-15);
    EXPECT_NEAR(gd_x(p).value, 2 * 0.01 * 0.99, 1e-15);
    EXPECT_NEAR(ggqd_x(p).value, 2 * 0.01 * 0.99, 1e-15);
}

TEST(Reference, CurvesMatchClosedForms) {
    for (int i = 0; i <= 100; ++i) {
        const double a = i / 100.0;
        if (a > 0) {
            EXPECT_NEAR(ggqd_x(example1(a)).value, example_reference(ExampleId::ex1, MeasureKind::ggqd, a), 1e-12);
        }
        EXPECT_NEAR(ggqd_x(example2(a)).value, example_reference(ExampleId::ex2, MeasureKind::ggqd, a), 1e-12);
        EXPECT_NEAR(gd_x(example2(a)).value, example_reference(ExampleId::ex2, MeasureKind::gd, a), 1e-12);
        EXPECT_NEAR(ggqd_x(example3(a)).value, example_reference(ExampleId::ex3, MeasureKind::ggqd, a), 1e-12);
        EXPECT_NEAR(gd_x(example3(a)).value, example_reference(ExampleId::ex3, MeasureKind::gd, a), 1e-12);
    }
}
