#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/transform.hpp"
#include "oracles.hpp"

using namespace degenchem;

namespace {

RadialProfile radial(const Params& p, std::size_t count, const std::function<double(double)>& f) {
    std::vector<double> r(count);
    std::vector<double> v(count);
    for (std::size_t k = 0; k < count; ++k) {
        r[k] = p.R * static_cast<double>(k + 1) / static_cast<double>(count);
        v[k] = f(r[k]);
    }
    return RadialProfile(r, v, p);
}

const Params kBump = make_params(2, 1.0, 1.0, std::numbers::pi / 2.0);

}  // namespace

TEST(Accumulate, ConstantDensity) {
    for (int n = 1; n <= 4; ++n) {
        const auto p = make_params(n, 1.3, 1.0, 1.0);
        const auto grid = make_grid(p, 200);
        const double c = 2.5;
        const auto w_nodes = accumulate(radial(p, 50, [c](double) { return c; }), grid);
        const auto w_fn = accumulate([c](double) { return c; }, p, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            EXPECT_NEAR(w_nodes.values[i], c * grid[i] / n, 1e-13) << "n=" << n;
            EXPECT_NEAR(w_fn.values[i], c * grid[i] / n, 1e-13) << "n=" << n;
        }
    }
}

TEST(Accumulate, ZeroDensity) {
    const auto grid = make_grid(kBump, 64);
    const auto w = accumulate([](double) { return 0.0; }, kBump, grid);
    for (const double v : w.values) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(Accumulate, BumpInTwoDimensions) {
    const auto grid = make_uniform_grid(0.0, 1.0, 101);
    const auto w = accumulate([](double r) { return 1.0 - r * r; }, kBump, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        EXPECT_NEAR(w.values[i], s / 2.0 - s * s / 4.0, 1e-14);
    }
    EXPECT_NEAR(w.values.back(), 0.25, 1e-14);
    // Mass of 1 - |x|^2 on the unit disk by polar quadrature.
    const double disk = 2.0 * std::numbers::pi * oracle::simpson([](double r) { return r * (1.0 - r * r); }, 0.0, 1.0, 1e-14);
    EXPECT_NEAR(total_mass(w, kBump), disk, 1e-12);
    EXPECT_NEAR(total_mass(w, kBump), std::numbers::pi / 2.0, 1e-12);
}

TEST(Accumulate, RejectsPartialGrid) {
    EXPECT_THROW(accumulate([](double) { return 1.0; }, kBump, make_uniform_grid(0.0, 0.5, 10)), DomainError);
}

TEST(DensityFromW, LinearGivesConstant) {
    const auto p = make_params(3, 1.0, 1.0, 2.0);
    const auto grid = make_grid(p, 300);
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        w[i] = p.mu * grid[i] / p.n;
    }
    const auto u = density_from_w(WProfile(grid, w), p);
    for (const double v : u.values) {
        EXPECT_NEAR(v, p.mu, 1e-9);
    }
}

TEST(DensityFromW, Zero) {
    const auto grid = make_uniform_grid(0.0, 1.0, 11);
    const auto u = density_from_w(WProfile(grid, std::vector<double>(11, 0.0)), kBump);
    for (const double v : u.values) {
        EXPECT_EQ(v, 0.0);
    }
    // Fewer than 3 nodes cannot form an SGrid.
    EXPECT_THROW(SGrid({0.0, 1.0}, GradingSpec{Grading::Uniform, 1, 1}), DomainError);
}

TEST(DensityFromW, BumpRecovered) {
    const auto grid = make_uniform_grid(0.0, 1.0, 201);
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        w[i] = grid[i] / 2.0 - grid[i] * grid[i] / 4.0;
    }
    const auto u = density_from_w(WProfile(grid, w), kBump);
    for (std::size_t k = 0; k < u.size(); ++k) {
        EXPECT_NEAR(u.values[k], 1.0 - u.r[k] * u.r[k], 1e-12);
    }
}

TEST(DensityFromW, RoundTripSecondOrder) {
    // u0 = exp(-r^2) in n = 2: w_s = exp(-s)/2 is smooth in s.
    const auto p = make_params(2, 1.0, 1.0, std::numbers::pi * (1.0 - std::exp(-1.0)));
    const auto u0 = [](double r) { return std::exp(-r * r); };
    const auto error = [&](std::size_t nodes) {
        const auto grid = make_uniform_grid(0.0, 1.0, nodes);
        const auto u = density_from_w(accumulate(u0, p, grid), p);
        double e = 0.0;
        for (std::size_t k = 0; k + 1 < u.size(); ++k) {
            e = std::max(e, std::abs(u.values[k] - u0(u.r[k])));
        }
        return e;
    };
    const double e1 = error(41);
    const double e2 = error(81);
    const double e3 = error(161);
    EXPECT_GE(e1 / e2, 3.0);
    EXPECT_LE(e1 / e2, 5.0);
    EXPECT_GE(e2 / e3, 3.0);
    EXPECT_LE(e2 / e3, 5.0);
}

TEST(DensityFromW, MonotoneDataGiveNonnegativeDensity) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto p = make_params(2, 1.0, 1.0, 1.0);
    const auto grid = make_grid(p, 120);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> w(grid.size(), 0.0);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            // Mixes flat cells with steep ones.
            const double inc = unit(rng) < 0.4 ? 0.0 : unit(rng);
            w[i] = w[i - 1] + inc;
        }
        const auto u = density_from_w(WProfile(grid, w), p);
        for (const double v : u.values) {
            EXPECT_GE(v, 0.0);
        }
    }
}

TEST(SignalGradient, EquilibriumDensity) {
    const auto p = make_params(3, 1.0, 1.0, 4.0);
    const auto vr = signal_gradient(radial(p, 100, [&](double) { return p.mu; }), p);
    for (const double v : vr.values) {
        EXPECT_NEAR(v, 0.0, 1e-14);
    }
}

TEST(SignalGradient, BumpClosedForm) {
    const auto u = radial(kBump, 2000, [](double r) { return 1.0 - r * r; });
    const auto vr = signal_gradient(u, kBump);
    for (std::size_t k = 0; k < vr.size(); ++k) {
        const double r = vr.r[k];
        EXPECT_NEAR(vr.values[k], (r * r * r - r) / 4.0, 1e-6);
    }
    EXPECT_NEAR(vr.values[999], -0.09375, 1e-6);
}

TEST(SignalGradient, LinearBound) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = make_params(n, 1.0 + unit(rng), 1.0, 1.0 + 5.0 * unit(rng));
            std::vector<double> r;
            std::vector<double> u;
            for (std::size_t k = 1; k <= 80; ++k) {
                r.push_back(p.R * static_cast<double>(k) / 80.0);
                u.push_back(3.0 * unit(rng));
            }
            const RadialProfile up(r, u, p);
            const auto vr = signal_gradient(up, p);
            const double c = signal_gradient_constant(up);
            for (std::size_t k = 0; k < vr.size(); ++k) {
                EXPECT_LE(std::abs(vr.values[k]), c * vr.r[k] * (1.0 + 1e-12));
            }
        }
    }
}

TEST(SignalReconstruct, ZeroAndLinear) {
    const auto zero = signal_reconstruct(radial(kBump, 50, [](double) { return 0.0; }));
    for (const double v : zero.values) {
        EXPECT_EQ(v, 0.0);
    }
    const auto lin = signal_reconstruct(radial(kBump, 50, [](double) { return 1.0; }));
    for (std::size_t k = 0; k < lin.size(); ++k) {
        EXPECT_NEAR(lin.values[k], lin.r[k] - 0.5, 1e-14);
    }
}

TEST(SignalReconstruct, BumpClosedForm) {
    const auto v = signal_reconstruct(radial(kBump, 4000, [](double r) { return (r * r * r - r) / 4.0; }));
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double r = v.r[k];
        EXPECT_NEAR(v.values[k], std::pow(r, 4) / 16.0 - r * r / 8.0 + 7.0 / 240.0, 1e-7);
    }
}

TEST(TotalMass, Definitions) {
    const auto p = make_params(2, 1.0, 1.0, 3.0);
    const auto grid = make_uniform_grid(0.0, 1.0, 5);
    EXPECT_NEAR(total_mass(WProfile(grid, {0.0, 0.1, 0.2, 0.3, p.w_max()}), p), 3.0, 1e-15);
    EXPECT_EQ(total_mass(WProfile(grid, std::vector<double>(5, 0.0)), p), 0.0);
}

TEST(TotalMass, MatchesRadialQuadrature) {
    for (int n = 1; n <= 4; ++n) {
        const auto p = make_params(n, 1.5, 1.0, 1.0);
        const auto u0 = [](double r) { return 2.0 + std::cos(3.0 * r); };
        const auto w = accumulate(u0, p, make_grid(p, 400));
        const double ref = p.omega_n * oracle::simpson([&](double r) { return std::pow(r, n - 1) * u0(r); }, 0.0, p.R, 1e-14);
        EXPECT_NEAR(total_mass(w, p), ref, 1e-10 * ref) << "n=" << n;
    }
}
