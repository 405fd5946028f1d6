#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "degenchem/analysis.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/solver.hpp"

using namespace degenchem;

namespace {

const Params kP = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);

WProfile stationary(const Params& p, const SGrid& grid) {
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        w[i] = p.mu * grid[i] / p.n;
    }
    w.back() = p.w_max();
    return WProfile(grid, w);
}

double sup_diff(const WProfile& a, const WProfile& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    }
    return d;
}

}  // namespace

TEST(StepEps, StationaryFixedPoint) {
    for (int n = 1; n <= 3; ++n) {
        const auto p = make_params(n, 1.2, 1.5, 2.0);
        const auto w = stationary(p, make_grid(p, 300));
        SolverConfig cfg;
        for (const double dt : {1e-5, 1e-4, 1e-3}) {
            EXPECT_LE(sup_diff(step_eps(w, dt, 0.0, p, cfg), w), 1e-12) << "n=" << n << " dt=" << dt;
        }
    }
}

TEST(StepEps, ZeroSolution) {
    Params p = make_params(2, 1.0, 1.0, 1.0);
    p.m = 0.0;
    p.mu = 0.0;
    const auto grid = make_uniform_grid(0.0, 1.0, 51);
    const WProfile w(grid, std::vector<double>(51, 0.0));
    const auto next = step_eps(w, 1e-3, 0.0, p, SolverConfig{});
    for (const double v : next.values) {
        EXPECT_EQ(v, 0.0);
    }
}

TEST(StepEps, NonFiniteIsStepFailure) {
    auto w = make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 1.0, 41)).profile;
    w.values[10] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(step_eps(w, 1e-4, 0.0, kP, SolverConfig{}), StepFailure);
    EXPECT_THROW(step_eps(w, 0.0, 0.0, kP, SolverConfig{}), DomainError);
}

TEST(StepEps, ThetaHalfStationary) {
    const auto w = stationary(kP, make_uniform_grid(0.0, 1.0, 101));
    SolverConfig cfg;
    cfg.theta = 0.5;
    EXPECT_LE(sup_diff(step_eps(w, 1e-4, 0.0, kP, cfg), w), 1e-12);
}

TEST(Evolve, StationaryRun) {
    const auto p = make_params(2, 1.0, 1.0, std::numbers::pi);
    const auto w0 = stationary(p, make_uniform_grid(0.0, 1.0, 257));
    SolverConfig cfg;
    cfg.t_end = 0.3;
    const auto run = evolve(w0, p, cfg, 0.0);
    EXPECT_EQ(run.termination, Termination::ReachedEnd);
    EXPECT_EQ(run.final_time, 0.3);
    EXPECT_LE(sup_diff(run.snapshots.back(), w0), 1e-8);
}

TEST(Evolve, SnapshotIntervalAndMass) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 201));
    SolverConfig cfg;
    cfg.t_end = 0.1;
    cfg.snapshot_interval = 0.025;
    const auto run = evolve(w0.profile, kP, cfg, 0.0);
    ASSERT_EQ(run.snapshots.size(), 5u);
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        EXPECT_EQ(run.snapshots[k].time, k == 4 ? 0.1 : 0.025 * static_cast<double>(k));
        if (k > 0) {
            EXPECT_GT(run.snapshots[k].time, run.snapshots[k - 1].time);
        }
    }
    const double m0 = run.diagnostics.front().mass;
    for (const auto& d : run.diagnostics) {
        EXPECT_NEAR(d.mass, m0, 1e-12 * m0);
        EXPECT_GE(d.min_value, 0.0);
        EXPECT_LE(d.max_value, kP.w_max() + 1e-10);
        EXPECT_GE(d.min_slope, -1e-10);
    }
}

TEST(Evolve, ConcavityPreserved) {
    for (const double steep : {1.0, 4.0}) {
        const auto w0 = make_concave_compatible(kP, steep, make_grid(kP, 400));
        SolverConfig cfg;
        cfg.t_end = 0.05;
        const auto run = evolve(w0.profile, kP, cfg, 0.0);
        for (const auto& d : run.diagnostics) {
            EXPECT_LE(d.max_second_difference, 1e-9);
        }
        for (const auto& snap : run.snapshots) {
            EXPECT_LE(check_concavity(snap).worst, 1e-9);
        }
    }
}

TEST(Evolve, ConcentratedHitsGradientThreshold) {
    const auto mc = make_moment_config(kP, kP.m);
    const auto w0 = make_concentrated(kP, mc.m0, mc.s0, make_grid(kP, 1024));
    SolverConfig cfg;
    const auto run = evolve(w0.profile, kP, cfg, 0.0);
    EXPECT_EQ(run.termination, Termination::GradientThreshold);
    EXPECT_LT(run.final_time, 1.0);
    EXPECT_GT(run.diagnostics.back().max_slope, cfg.gradient_threshold(kP));
    EXPECT_EQ(run.snapshots.back().time, run.final_time);
}

TEST(Evolve, StepLimitReported) {
    const auto w0 = make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 1.0, 51));
    SolverConfig cfg;
    cfg.max_steps = 3;
    const auto run = evolve(w0.profile, kP, cfg, 0.0);
    EXPECT_EQ(run.termination, Termination::StepFailure);
    EXPECT_FALSE(run.failure_message.empty());
}

TEST(Evolve, RejectsInconsistentInput) {
    const auto w0 = make_concave_compatible(kP, 1.0, make_uniform_grid(0.0, 1.0, 51));
    SolverConfig cfg;
    EXPECT_THROW(evolve(w0.profile, kP, cfg, 0.1), DomainError);
    cfg.eps_list = {0.1, 0.2};
    EXPECT_THROW(evolve(w0.profile, kP, cfg, 0.0), DomainError);
    cfg.eps_list.clear();
    cfg.theta = 1.5;
    EXPECT_THROW(evolve(w0.profile, kP, cfg, 0.0), DomainError);
}

TEST(Evolve, FirstOrderInTime) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 101));
    const auto at_end = [&](double dt) {
        SolverConfig cfg;
        cfg.dt_policy = DtPolicy::Fixed;
        cfg.dt = dt;
        cfg.t_end = 0.05;
        EXPECT_LE(dt, cfl_step(w0.profile, 0.0, kP, cfg));
        return evolve(w0.profile, kP, cfg, 0.0).snapshots.back();
    };
    const auto a = at_end(1e-3);
    const auto b = at_end(5e-4);
    const auto c = at_end(2.5e-4);
    const double ratio = sup_diff(a, b) / sup_diff(b, c);
    EXPECT_GE(ratio, 1.7);
    EXPECT_LE(ratio, 2.3);
}

TEST(Evolve, ComparisonOfOrderedData) {
    const auto grid = make_uniform_grid(0.0, 1.0, 201);
    const auto upper = make_concave_compatible(kP, 1.0, grid).profile;
    auto lower = upper;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lower.values[i] -= 0.02 * grid[i] * (1.0 - grid[i]);
    }
    SolverConfig cfg;
    cfg.dt_policy = DtPolicy::Fixed;
    cfg.dt = 2e-4;
    cfg.t_end = 0.05;
    const auto rep = check_comparison(evolve(lower, kP, cfg, 0.0), evolve(upper, kP, cfg, 0.0));
    EXPECT_TRUE(rep.passed);
    EXPECT_LE(rep.worst_violation, 1e-8);
}

TEST(LimitFamily, SingleMember) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 201));
    SolverConfig cfg;
    cfg.t_end = 0.05;
    cfg.snapshot_interval = 0.01;
    cfg.eps_list = {0.1};
    const auto fam = limit_family(w0, kP, cfg);
    ASSERT_EQ(fam.members.size(), 1u);
    EXPECT_TRUE(fam.increments.empty());
    EXPECT_TRUE(fam.complete);
    const auto direct = evolve(regularized_initial(w0, 0.1), kP, cfg, 0.1);
    ASSERT_EQ(fam.limit_values.size(), fam.shared_times.size());
    const auto& last = fam.limit_values.back();
    const auto& snap = direct.snapshots.back();
    for (std::size_t j = 0; j < fam.shared_nodes.size(); ++j) {
        EXPECT_EQ(last[j], discrete::interpolate(snap.grid, snap.values, fam.shared_nodes[j]));
    }
}

TEST(LimitFamily, OrderedAndParallelIdentical) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 257));
    SolverConfig cfg;
    cfg.t_end = 0.1;
    cfg.snapshot_interval = 0.02;
    cfg.eps_list = {0.2, 0.1, 0.05};
    const auto serial = limit_family(w0, kP, cfg);
    cfg.parallel_family = true;
    const auto parallel = limit_family(w0, kP, cfg);
    ASSERT_EQ(serial.increments.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_GE(serial.increments[k].min_difference, -1e-8);
        EXPECT_EQ(serial.increments[k].sup_increment, parallel.increments[k].sup_increment);
    }
    EXPECT_LT(serial.increments[1].sup_increment, serial.increments[0].sup_increment);
    EXPECT_EQ(serial.limit_values, parallel.limit_values);
}

TEST(LimitFamily, FailedMembersReported) {
    const auto w0 = make_concave_compatible(kP, 2.0, make_uniform_grid(0.0, 1.0, 101));
    SolverConfig cfg;
    cfg.eps_list = {0.2, 0.1};
    cfg.max_steps = 2;
    const auto fam = limit_family(w0, kP, cfg);
    EXPECT_FALSE(fam.complete);
    EXPECT_NE(fam.failure_report.find("eps=0.2"), std::string::npos);
}
