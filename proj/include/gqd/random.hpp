// Reproducible random two-qubit states. All draws come straight from the
// bits of a 64-bit Mersenne Twister so a (seed, index) pair yields the same
// state on every platform.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "gqd/core.hpp"
#include "gqd/measures.hpp"

namespace gqd {

class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    double normal() {
        // Box-Muller; 1 - u keeps the logarithm finite.
        const double u = 1.0 - uniform();
        const double v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    }

    /// Flat-Dirichlet diagonal from sorted-uniform spacings, antidiagonal
    /// moduli uniform in their PSD-allowed intervals and uniform phases.
    XStateParams x_params() {
        std::array<double, 3> u{uniform(), uniform(), uniform()};
        std::sort(u.begin(), u.end());
        XStateParams p;
        p.d0 = u[0];
        p.d1 = u[1] - u[0];
        p.d2 = u[2] - u[1];
        p.d3 = 1.0 - u[2];
        const double r03 = uniform() * std::sqrt(p.d0 * p.d3);
        const double r12 = uniform() * std::sqrt(p.d1 * p.d2);
        p.a03 = std::polar(r03, 2.0 * std::numbers::pi * uniform());
        p.a12 = std::polar(r12, 2.0 * std::numbers::pi * uniform());
        return p;
    }

    /// As x_params but with real nonnegative antidiagonals (phases dropped).
    XStateParams real_x_params() {
        XStateParams p = x_params();
        p.a03 = std::abs(p.a03);
        p.a12 = std::abs(p.a12);
        return p;
    }

    /// G G^dagger / tr(G G^dagger) with G a 4 x rank complex Gaussian matrix.
    DensityMatrix4 density(int rank = 4) {
        rank = std::clamp(rank, 1, 4);
        std::array<std::array<Complex, 4>, 4> g{};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < rank; ++k) g[i][k] = Complex{normal(), normal()};
        Matrix4c m;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                for (int k = 0; k < rank; ++k) m(i, j) += g[i][k] * std::conj(g[j][k]);
        const double tr = trace(m).real();
        for (auto& z : m.data) z /= tr;
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = m(i, i).real();
        return validate_density(m);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gqd
