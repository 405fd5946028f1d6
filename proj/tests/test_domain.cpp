#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "degenchem/domain.hpp"
#include "oracles.hpp"

using namespace degenchem;

TEST(UnitSphereArea, LowDimensions) {
    EXPECT_DOUBLE_EQ(unit_sphere_area(1), 2.0);
    EXPECT_NEAR(unit_sphere_area(2), 6.283185, 1e-6);
    EXPECT_NEAR(unit_sphere_area(3), 12.566371, 1e-6);
}

TEST(UnitSphereArea, MatchesRecursionUpToTen) {
    for (int n = 1; n <= 10; ++n) {
        const double a = unit_sphere_area(n);
        EXPECT_GT(a, 0.0);
        EXPECT_NEAR(a, oracle::sphere_area(n), 1e-14 * oracle::sphere_area(n)) << "n=" << n;
    }
}

TEST(UnitSphereArea, RejectsNonpositive) {
    EXPECT_THROW(unit_sphere_area(0), DomainError);
    EXPECT_THROW(unit_sphere_area(-2), DomainError);
}

TEST(MakeParams, Mu) {
    EXPECT_NEAR(make_params(2, 1.0, 1.0, std::numbers::pi / 2.0).mu, 0.5, 1e-15);
    EXPECT_NEAR(make_params(1, 1.0, 3.0, 2.0).mu, 1.0, 1e-15);
}

TEST(MakeParams, RejectsBadData) {
    EXPECT_THROW(make_params(3, 2.0, 1.0, 0.0), DomainError);
    EXPECT_THROW(make_params(2, -1.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(make_params(2, 1.0, 0.0, 1.0), DomainError);
    EXPECT_THROW(make_params(0, 1.0, 1.0, 1.0), DomainError);
}

TEST(MakeParams, MuRecoversMass) {
    for (int n = 1; n <= 5; ++n) {
        for (const double R : {0.5, 1.0, 3.0}) {
            for (const double m : {0.1, 1.0, 40.0}) {
                const auto p = make_params(n, R, 1.0, m);
                EXPECT_NEAR(p.mu * p.omega_n * std::pow(R, n) / n, m, 1e-14 * m);
            }
        }
    }
}

TEST(SGrid, UniformEndpoints) {
    const auto g = make_uniform_grid(0.0, 2.0, 5);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.lower(), 0.0);
    EXPECT_EQ(g.upper(), 2.0);
    EXPECT_DOUBLE_EQ(g.spacing(2), 0.5);
}

TEST(SGrid, GradedRefinesTowardZero) {
    const auto p = make_params(2, 1.5, 1.0, 1.0);
    const auto g = make_grid(p, 400);
    EXPECT_EQ(g.lower(), 0.0);
    EXPECT_EQ(g.upper(), p.volume_extent());
    EXPECT_LT(g.spacing(0), g.spacing(g.size() - 2));
    for (std::size_t i = 0; i + 2 < g.size(); ++i) {
        const double r = g.spacing(i + 1) / g.spacing(i);
        EXPECT_LE(r, 1.05 * (1.0 + 1e-9));
        EXPECT_GE(r, 1.0 / (1.05 * (1.0 + 1e-9)));
    }
}

TEST(SGrid, RejectsDegenerateInput) {
    EXPECT_THROW(make_uniform_grid(0.0, 1.0, 2), DomainError);
    EXPECT_THROW(SGrid({0.0, 0.5, 0.5, 1.0}, GradingSpec{Grading::Uniform, 1.0, 1.0}), DomainError);
    // Adjacent spacing ratio 100 exceeds the default bound.
    EXPECT_THROW(SGrid({0.0, 0.01, 1.01}, GradingSpec{Grading::Uniform, 1.0, 1.0}), DomainError);
}
