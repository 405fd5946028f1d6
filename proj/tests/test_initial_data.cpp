#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"

using namespace degenchem;

namespace {

const Params kP = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);

double extrapolated_end_curvature(const WProfile& w) {
    const auto& g = w.grid;
    const auto d = [&](std::size_t i) { return discrete::second_difference(g, w.values, i); };
    return std::abs(d(1) + (d(1) - d(2)) * g.spacing(0) / g.spacing(1));
}

}  // namespace

TEST(ConcaveCompatible, EndpointsAndCurvature) {
    double previous = 0.0;
    for (const std::size_t nodes : {257u, 513u, 1025u}) {
        const auto w0 = make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 1.0, nodes));
        EXPECT_EQ(w0.profile.values.front(), 0.0);
        EXPECT_EQ(w0.profile.values.back(), kP.w_max());
        // P''(0) = 0: the extrapolated second difference vanishes at second order.
        const double c = extrapolated_end_curvature(w0.profile);
        if (previous > 0.0) {
            EXPECT_GE(previous / c, 3.0);
            EXPECT_LE(previous / c, 5.0);
        }
        previous = c;
    }
}

TEST(ConcaveCompatible, SteepnessFourValue) {
    const auto grid = make_uniform_grid(0.0, 1.0, 1025);
    const auto w0 = make_concave_compatible(kP, 4.0, grid);
    // s = 1/8 is node 128; x = s / (R^n / 4) = 1/2 and 2x - 2x^3 + x^4 = 13/16.
    EXPECT_DOUBLE_EQ(grid[128], 0.125);
    EXPECT_NEAR(w0.profile.values[128], 13.0 / 16.0, 1e-15);
    EXPECT_NEAR(discrete::interpolate(grid, w0.profile.values, 0.125), 0.8125, 1e-15);
}

TEST(ConcaveCompatible, FlagsAndValidation) {
    for (const double steep : {1.0, 2.0, 6.0}) {
        const auto w0 = make_concave_compatible(kP, steep, make_grid(kP, 600));
        EXPECT_TRUE(w0.flags.boundary_and_monotone);
        EXPECT_TRUE(w0.flags.concave);
        EXPECT_TRUE(w0.flags.compatible);
        const auto rep = validate(w0, kP);
        EXPECT_TRUE(rep.boundary_and_monotone.passed);
        EXPECT_TRUE(rep.concave.passed);
        EXPECT_TRUE(rep.compatible.passed);
    }
}

TEST(ConcaveCompatible, QuadraticIsNotCompatible) {
    const auto w0 = make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 1.0, 400), ConcaveShape::Quadratic);
    EXPECT_TRUE(w0.flags.concave);
    EXPECT_FALSE(w0.flags.compatible);
}

TEST(ConcaveCompatible, QuinticRejected) {
    EXPECT_THROW(make_concave_compatible(kP, 4.0, make_uniform_grid(0.0, 1.0, 400), ConcaveShape::QuinticSmoothstep),
                 DomainError);
}

TEST(ConcaveCompatible, RejectsBadArguments) {
    EXPECT_THROW(make_concave_compatible(kP, 0.5, make_uniform_grid(0.0, 1.0, 10)), DomainError);
    EXPECT_THROW(make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 0.5, 10)), DomainError);
}

TEST(Concentrated, AllMassInside) {
    const auto grid = make_uniform_grid(0.0, 1.0, 401);
    const auto w0 = make_concentrated(kP, kP.m, 0.25, grid);
    EXPECT_NEAR(discrete::interpolate(grid, w0.profile.values, 0.25), kP.w_max(), 1e-15);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= 0.25) {
            EXPECT_EQ(w0.profile.values[i], kP.w_max());
        }
    }
}

TEST(Concentrated, HalfMass) {
    const auto grid = make_uniform_grid(0.0, 1.0, 401);
    const auto w0 = make_concentrated(kP, kP.m / 2.0, 0.25, grid);
    EXPECT_NEAR(discrete::interpolate(grid, w0.profile.values, 0.25), kP.m / (2.0 * kP.omega_n), 1e-15);
    EXPECT_EQ(w0.profile.values.back(), kP.w_max());
}

TEST(Concentrated, ThresholdAndMonotone) {
    const auto grid = make_grid(kP, 1024);
    const auto w0 = make_concentrated(kP, std::numbers::pi, 0.1, grid);
    EXPECT_GE(discrete::interpolate(grid, w0.profile.values, 0.1), 0.5 - 1e-15);
    EXPECT_GE(discrete::min_cell_slope(grid, w0.profile.values), 0.0);
    EXPECT_TRUE(w0.flags.concentrated);
    EXPECT_TRUE(w0.flags.boundary_and_monotone);
}

TEST(Concentrated, RejectsExcessMass) {
    EXPECT_THROW(make_concentrated(kP, 1.5 * kP.m, 0.25, make_grid(kP, 200)), DomainError);
    EXPECT_THROW(make_concentrated(kP, kP.m, 1.0, make_grid(kP, 200)), DomainError);
}

TEST(Validate, BoundaryViolation) {
    const auto grid = make_uniform_grid(0.0, 1.0, 11);
    std::vector<double> w(11);
    for (std::size_t i = 0; i < 11; ++i) {
        w[i] = grid[i];
    }
    w[0] = 0.01;
    const auto rep = validate(import_profile(WProfile(grid, w), kP), kP);
    EXPECT_FALSE(rep.boundary_and_monotone.passed);
    EXPECT_EQ(rep.boundary_and_monotone.worst_node, 0u);
    EXPECT_NEAR(rep.boundary_and_monotone.violation, 0.01, 1e-15);
}

TEST(Validate, ConvexProfileFailsEverywhere) {
    const auto grid = make_grid(kP, 200);
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        w[i] = kP.w_max() * grid[i] * grid[i];
    }
    const auto w0 = import_profile(WProfile(grid, w), kP);
    EXPECT_FALSE(w0.flags.concave);
    EXPECT_FALSE(validate(w0, kP).concave.passed);
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        EXPECT_GT(discrete::second_difference(grid, w, i), 0.0) << "node " << i;
    }
}

TEST(Validate, ConcentrationChecked) {
    const auto grid = make_uniform_grid(0.0, 1.0, 101);
    const auto lin = make_linear(kP, grid);
    MomentConfig mc;
    mc.s0 = 0.1;
    mc.s1 = 0.2;
    mc.m0 = kP.m / 2.0;
    const auto rep = validate(lin, kP, mc);
    EXPECT_TRUE(rep.concentrated.evaluated);
    EXPECT_FALSE(rep.concentrated.passed);
    EXPECT_NEAR(rep.concentrated.violation, 0.5 - 0.1, 1e-15);
}

TEST(Regularized, LinearHalf) {
    const auto grid = make_uniform_grid(0.0, 1.0, 101);
    const auto w0 = make_linear(kP, grid);
    const auto we = regularized_initial(w0, 0.5);
    EXPECT_EQ(we.grid.lower(), 0.5);
    EXPECT_EQ(we.grid.upper(), 1.0);
    for (std::size_t j = 0; j < we.size(); ++j) {
        EXPECT_NEAR(we.values[j], kP.w_max() * (2.0 * we.grid[j] - 1.0), 1e-14);
    }
}

TEST(Regularized, EndpointsAndMonotone) {
    const auto w0 = make_concave_compatible(kP, 3.0, make_grid(kP, 500));
    for (const double eps : {0.3, 0.05, 1e-4}) {
        const auto we = regularized_initial(w0, eps);
        EXPECT_EQ(we.values.front(), 0.0);
        EXPECT_EQ(we.values.back(), kP.w_max());
        EXPECT_GE(discrete::min_cell_slope(we.grid, we.values), 0.0);
    }
}

TEST(Regularized, FamilyOrderedAndConverging) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 801));
    const std::vector<double> probes = {0.3, 0.5, 0.7, 0.9};
    const std::vector<double> eps_list = {0.2, 0.1, 0.05, 0.025, 0.0125};
    for (std::size_t k = 0; k + 1 < eps_list.size(); ++k) {
        const auto coarse = regularized_initial(w0, eps_list[k]);
        const auto fine = regularized_initial(w0, eps_list[k + 1]);
        for (std::size_t j = 0; j < coarse.size(); ++j) {
            const double s = coarse.grid[j];
            EXPECT_GE(discrete::interpolate(fine.grid, fine.values, s), coarse.values[j]) << "s=" << s;
        }
    }
    double last_gap = 1.0;
    for (const double eps : eps_list) {
        const auto we = regularized_initial(w0, eps);
        double gap = 0.0;
        for (const double s : probes) {
            gap = std::max(gap, std::abs(discrete::interpolate(we.grid, we.values, s) -
                                         discrete::interpolate(w0.profile.grid, w0.profile.values, s)));
        }
        EXPECT_LT(gap, last_gap);
        last_gap = gap;
    }
    EXPECT_LT(last_gap, 0.02);
}

TEST(Regularized, RejectsLargeEps) {
    const auto w0 = make_linear(kP, make_uniform_grid(0.0, 1.0, 11));
    EXPECT_THROW(regularized_initial(w0, 1.0), DomainError);
    EXPECT_THROW(regularized_initial(w0, 0.0), DomainError);
}
