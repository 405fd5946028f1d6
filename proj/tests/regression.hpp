#pragma once

// Regression runs shared by the acceptance suite and the unit tests.

#include <numbers>
#include <string>
#include <vector>

#include "degenchem/degenchem.hpp"

namespace regression {

using namespace degenchem;

struct Scenario {
    std::string name;
    Params params;
    WInitial w0;
    SolverConfig cfg;
};

inline SolverConfig interval_config(double t_end, double interval) {
    SolverConfig cfg;
    cfg.t_end = t_end;
    cfg.snapshot_interval = interval;
    return cfg;
}

inline std::vector<Scenario> scenarios() {
    std::vector<Scenario> out;
    {
        const auto p = make_params(2, 1.0, 1.0, std::numbers::pi);
        out.push_back({"stationary_n2", p, make_linear(p, make_uniform_grid(0.0, 1.0, 1024)),
                       interval_config(1.0, 0.1)});
    }
    {
        const auto p = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);
        out.push_back({"quartic_n2_b1", p, make_concave_compatible(p, 1.0, make_grid(p, 401, {Grading::Uniform, 1, 1})),
                       interval_config(0.2, 0.01)});
    }
    {
        const auto p = make_params(2, 1.0, 0.5, std::numbers::pi);
        out.push_back({"quadratic_n2_b05", p,
                       make_concave_compatible(p, 1.5, make_grid(p, 513, {Grading::Uniform, 1, 1}),
                                               ConcaveShape::Quadratic),
                       interval_config(0.3, 0.02)});
    }
    {
        const auto p = make_params(3, 1.0, 1.5, 2.0 * std::numbers::pi);
        out.push_back({"quartic_n3_graded", p, make_concave_compatible(p, 3.0, make_grid(p, 601, GradingSpec{})),
                       interval_config(0.05, 0.005)});
    }
    {
        const auto p = make_params(1, 2.0, 2.0, 3.0);
        out.push_back({"quartic_n1", p, make_concave_compatible(p, 2.0, make_grid(p, 301, {Grading::Uniform, 1, 1})),
                       interval_config(0.5, 0.05)});
    }
    {
        const auto p = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);
        const auto grid = make_grid(p, 801, {Grading::Uniform, 1, 1});
        out.push_back({"concentrated_wide_n2", p, make_concentrated(p, 0.5 * p.m, 0.25, grid, 1.0),
                       interval_config(0.2, 0.01)});
    }
    {
        // Blow-up run: thresholds from the moment machinery, graded grid.
        const auto p = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);
        const auto mc = make_moment_config(p, p.m);
        auto cfg = interval_config(1.0, 0.0);
        out.push_back({"concentrated_blowup_n2", p, make_concentrated(p, mc.m0, mc.s0, make_grid(p, 2048)), cfg});
    }
    return out;
}

/// Moment parameters for a scenario: the chosen gamma and s1 when admissible, else (0.5, R^n / 2).
inline std::pair<double, double> moment_probe(const Params& p) {
    if (p.beta > 2.0 - p.n && threshold_exponent(p) > 0.0) {
        const auto mc = make_moment_config(p, p.m);
        return {mc.gamma, mc.s1};
    }
    return {0.5, 0.5 * p.volume_extent()};
}

/// eps-family used for the monotone-limit checks.
struct FamilyScenario {
    Params params;
    WInitial w0;
    SolverConfig cfg;
};

inline FamilyScenario family_scenario() {
    const auto p = make_params(2, 1.0, 1.0, 2.0 * std::numbers::pi);
    auto cfg = interval_config(0.5, 0.05);
    const double extent = p.volume_extent();
    cfg.eps_list = {0.2 * extent, 0.1 * extent, 0.05 * extent, 0.025 * extent};
    cfg.parallel_family = true;
    return {p, make_concave_compatible(p, 2.0, make_grid(p, 1025, {Grading::Uniform, 1, 1})), cfg};
}

}  // namespace regression
