#pragma once

/**
 * @file initial_data.hpp
 * @brief Initial mass-accumulation profiles w0 and checks of the hypotheses
 *        placed on them: boundary values and monotonicity, concavity,
 *        endpoint compatibility, and mass concentration near the origin.
 *
 * All generation and validation happens in w-space. Densities are brought in
 * through transform::accumulate first.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/moment_config.hpp"
#include "degenchem/profile.hpp"

namespace degenchem {

enum class SmoothnessClass { Continuous, C1, C2Compatible };

inline const char* to_string(SmoothnessClass c) {
    switch (c) {
        case SmoothnessClass::Continuous: return "continuous";
        case SmoothnessClass::C1: return "C1";
        case SmoothnessClass::C2Compatible: return "C2-compatible";
    }
    return "unknown";
}

struct SmoothnessTag {
    SmoothnessClass smoothness = SmoothnessClass::Continuous;
    /// Name of the generator that produced the profile ("quartic", "imported", ...).
    std::string generator = "imported";
    /// Hoelder exponent of the underlying data; metadata only, never checked.
    std::optional<double> hoelder_exponent;
};

struct HypothesisFlags {
    bool boundary_and_monotone = false;  // w0(0) = 0, w0(R^n) = m/omega_n, w0_s >= 0
    bool concave = false;                // w0_ss <= 0
    bool compatible = false;             // w0_ss(0) = 0, w0_s(R^n) = 0, w0_ss(R^n) = 0
    bool concentrated = false;           // w0(s0) >= m0/omega_n
};

struct WInitial {
    WProfile profile;
    SmoothnessTag tag;
    HypothesisFlags flags;
};

/// Tolerances used by validate(); relative to the profile's natural scales.
struct ValidationTolerances {
    double boundary = 1e-12;       // relative to m/omega_n
    double slope = 1e-10;          // relative to (m/omega_n)/R^n
    double concavity = 1e-9;       // relative to (m/omega_n)/R^(2n)
    /// Endpoint derivative estimates must be this small relative to the
    /// profile's largest |w_ss| (resp. |w_s|); discretization error of the
    /// one-sided estimates is O(h), so exact zeros are not observable.
    double compatibility = 0.05;
};

struct HypothesisCheck {
    std::string name;
    bool evaluated = false;
    bool passed = false;
    std::size_t worst_node = 0;
    /// Size of the worst violation (0 when passed with margin).
    double violation = 0.0;
    std::string detail;
};

struct HypothesisReport {
    HypothesisCheck boundary_and_monotone{"w0def", false, false, 0, 0.0, {}};
    HypothesisCheck concave{"w0ssneg", false, false, 0, 0.0, {}};
    HypothesisCheck compatible{"compatibility", false, false, 0, 0.0, {}};
    HypothesisCheck concentrated{"concentration", false, false, 0, 0.0, {}};

    [[nodiscard]] bool all_evaluated_pass() const {
        for (const auto* c : {&boundary_and_monotone, &concave, &compatible, &concentrated}) {
            if (c->evaluated && !c->passed) {
                return false;
            }
        }
        return true;
    }
};

namespace shapes {

/// 2x - 2x^3 + x^4: concave on [0,1] with P''(0) = P'(1) = P''(1) = 0.
inline double quartic(double x) { return x * (2.0 + x * x * (x - 2.0)); }
inline double quartic_d1(double x) { return 2.0 - 6.0 * x * x + 4.0 * x * x * x; }
inline double quartic_d2(double x) { return -12.0 * x * (1.0 - x); }

/// x(2 - x): concave, P'(1) = 0, but P'' = -2 at both ends.
inline double quadratic(double x) { return x * (2.0 - x); }

/// 6x^5 - 15x^4 + 10x^3: C2-flat at both ends but convex on (0, 1/2).
inline double quintic(double x) { return x * x * x * (10.0 + x * (6.0 * x - 15.0)); }

}  // namespace shapes

enum class ConcaveShape { Quartic, Quadratic, QuinticSmoothstep };

inline const char* to_string(ConcaveShape s) {
    switch (s) {
        case ConcaveShape::Quartic: return "quartic";
        case ConcaveShape::Quadratic: return "quadratic";
        case ConcaveShape::QuinticSmoothstep: return "quintic";
    }
    return "unknown";
}

HypothesisReport validate(const WInitial& w0, const Params& p,
                          const std::optional<MomentConfig>& moment = std::nullopt,
                          const ValidationTolerances& tol = {});

/**
 * w0(s) = (m/omega_n) P(min(s/s_c, 1)), s_c = R^n / steepness.
 *
 * Throws DomainError when the profile is not concave on the grid (always the
 * case for the quintic smoothstep, which is convex near 0).
 */
inline WInitial make_concave_compatible(const Params& p, double steepness, const SGrid& grid,
                                        ConcaveShape shape = ConcaveShape::Quartic) {
    if (!(steepness >= 1.0) || !std::isfinite(steepness)) {
        throw DomainError("make_concave_compatible: steepness must be >= 1");
    }
    const double extent = p.volume_extent();
    if (grid.lower() != 0.0 || std::abs(grid.upper() - extent) > 1e-12 * extent) {
        throw DomainError("make_concave_compatible: grid must span [0, R^n]");
    }
    const double s_c = extent / steepness;
    const double top = p.w_max();
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = std::min(grid[i] / s_c, 1.0);
        switch (shape) {
            case ConcaveShape::Quartic: w[i] = top * shapes::quartic(x); break;
            case ConcaveShape::Quadratic: w[i] = top * shapes::quadratic(x); break;
            case ConcaveShape::QuinticSmoothstep: w[i] = top * shapes::quintic(x); break;
        }
    }
    w.front() = 0.0;
    w.back() = top;

    WInitial out{WProfile(grid, std::move(w), 0.0), SmoothnessTag{}, HypothesisFlags{}};
    out.tag.generator = to_string(shape);
    out.tag.smoothness =
        shape == ConcaveShape::Quadratic ? SmoothnessClass::C1 : SmoothnessClass::C2Compatible;

    const auto report = validate(out, p);
    if (!report.concave.passed) {
        std::ostringstream msg;
        msg << "make_concave_compatible: " << to_string(shape)
            << " profile is not concave on the grid (scaled second difference "
            << report.concave.violation << " at node " << report.concave.worst_node << ")";
        throw DomainError(msg.str());
    }
    out.flags.boundary_and_monotone = report.boundary_and_monotone.passed;
    out.flags.concave = true;
    out.flags.compatible = report.compatible.passed;
    return out;
}

/**
 * Mass m0 packed into [0, s0]: a concave quadratic ramp reaching m0/omega_n at
 * ramp_fraction * s0, a plateau up to s0, then a linear rise to m/omega_n.
 */
inline WInitial make_concentrated(const Params& p, double m0, double s0, const SGrid& grid,
                                  double ramp_fraction = 1.0 / 16.0) {
    const double extent = p.volume_extent();
    if (!(m0 > 0.0)) {
        throw DomainError("make_concentrated: m0 must be positive");
    }
    if (m0 > p.m * (1.0 + 1e-14)) {
        throw DomainError("make_concentrated: m0 exceeds the total mass m");
    }
    if (!(s0 > 0.0) || !(s0 < extent)) {
        throw DomainError("make_concentrated: s0 must lie in (0, R^n)");
    }
    if (!(ramp_fraction > 0.0) || ramp_fraction > 1.0) {
        throw DomainError("make_concentrated: ramp_fraction must lie in (0, 1]");
    }
    if (grid.lower() != 0.0 || std::abs(grid.upper() - extent) > 1e-12 * extent) {
        throw DomainError("make_concentrated: grid must span [0, R^n]");
    }
    m0 = std::min(m0, p.m);
    const double inner = m0 / p.omega_n;
    const double top = p.w_max();
    const double s_ramp = ramp_fraction * s0;
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double s = grid[i];
        if (s < s_ramp) {
            const double x = s / s_ramp;
            w[i] = inner * x * (2.0 - x);
        } else if (s <= s0) {
            w[i] = inner;
        } else {
            w[i] = inner + (top - inner) * (s - s0) / (extent - s0);
        }
    }
    w.front() = 0.0;
    w.back() = top;

    WInitial out{WProfile(grid, std::move(w), 0.0), SmoothnessTag{}, HypothesisFlags{}};
    out.tag.generator = "concentrated";
    out.tag.smoothness = SmoothnessClass::Continuous;

    MomentConfig probe;
    probe.s0 = s0;
    probe.s1 = 2.0 * s0;
    probe.m0 = m0;
    const auto report = validate(out, p, probe);
    if (!report.concentrated.passed) {
        throw DomainError("make_concentrated: grid too coarse to resolve w0(s0) >= m0/omega_n");
    }
    out.flags.boundary_and_monotone = report.boundary_and_monotone.passed;
    out.flags.concentrated = true;
    return out;
}

/// Straight line w0 = (m/omega_n) s / R^n, i.e. the constant density mu.
inline WInitial make_linear(const Params& p, const SGrid& grid) {
    const double top = p.w_max();
    const double extent = p.volume_extent();
    std::vector<double> w(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        w[i] = top * grid[i] / extent;
    }
    w.front() = 0.0;
    w.back() = top;
    WInitial out{WProfile(grid, std::move(w), 0.0), SmoothnessTag{SmoothnessClass::C1, "linear", {}},
                 HypothesisFlags{}};
    out.flags.boundary_and_monotone = validate(out, p).boundary_and_monotone.passed;
    return out;
}

/// Wraps an externally produced profile and records which hypotheses it meets.
inline WInitial import_profile(const WProfile& w0, const Params& p,
                               const std::optional<MomentConfig>& moment = std::nullopt) {
    WInitial out{w0, SmoothnessTag{SmoothnessClass::Continuous, "imported", {}}, HypothesisFlags{}};
    const auto report = validate(out, p, moment);
    out.flags.boundary_and_monotone = report.boundary_and_monotone.passed;
    out.flags.concave = report.concave.passed;
    out.flags.compatible = report.compatible.passed;
    out.flags.concentrated = report.concentrated.evaluated && report.concentrated.passed;
    return out;
}

inline HypothesisReport validate(const WInitial& w0, const Params& p,
                                 const std::optional<MomentConfig>& moment,
                                 const ValidationTolerances& tol) {
    const auto& grid = w0.profile.grid;
    const auto& w = w0.profile.values;
    const double top = p.w_max();
    const double extent = p.volume_extent();
    const std::size_t last = w.size() - 1;
    HypothesisReport report;

    {
        auto& c = report.boundary_and_monotone;
        c.evaluated = true;
        double worst = 0.0;
        std::size_t node = 0;
        std::string what;
        const double left = std::abs(w[0]);
        if (left > tol.boundary * top && left > worst) {
            worst = left;
            node = 0;
            what = "w0(0) != 0";
        }
        const double right = std::abs(w[last] - top);
        if (right > tol.boundary * top && right > worst) {
            worst = right;
            node = last;
            what = "w0(R^n) != m/omega_n";
        }
        const double slope_floor = -tol.slope * top / extent;
        for (std::size_t i = 0; i < last; ++i) {
            const double slope = discrete::cell_slope(grid, w, i);
            if (slope < slope_floor && -slope > worst) {
                worst = -slope;
                node = i;
                what = "negative slope";
            }
        }
        c.passed = worst == 0.0;
        c.violation = worst;
        c.worst_node = node;
        c.detail = what;
    }

    const double curvature_scale = extent * extent / top;
    double max_abs_curvature = 0.0;
    for (std::size_t i = 1; i < last; ++i) {
        max_abs_curvature = std::max(max_abs_curvature, std::abs(discrete::second_difference(grid, w, i)));
    }

    {
        auto& c = report.concave;
        c.evaluated = true;
        const auto measure = discrete::max_second_difference(grid, w, curvature_scale);
        c.passed = measure.worst <= tol.concavity;
        c.violation = std::max(0.0, measure.worst);
        c.worst_node = measure.node;
        c.detail = "max scaled second difference";
    }

    if (w.size() >= 4) {
        auto& c = report.compatible;
        c.evaluated = true;
        const auto d = [&](std::size_t i) { return discrete::second_difference(grid, w, i); };
        const double left = d(1) + (d(1) - d(2)) * grid.spacing(0) / grid.spacing(1);
        const double right =
            d(last - 1) + (d(last - 1) - d(last - 2)) * grid.spacing(last - 1) / grid.spacing(last - 2);
        const double slope_end = discrete::node_derivative(grid, w, last);
        const double max_slope = std::max(std::abs(discrete::max_cell_slope(grid, w)),
                                          std::abs(discrete::min_cell_slope(grid, w)));
        const double curv_allow = tol.concavity * top / (extent * extent) + tol.compatibility * max_abs_curvature;
        const double slope_allow = tol.slope * top / extent + tol.compatibility * max_slope;
        struct Item {
            double excess;
            std::size_t node;
            const char* what;
        };
        const Item items[] = {{std::abs(left) - curv_allow, 0, "w0_ss(0) != 0"},
                              {std::abs(slope_end) - slope_allow, last, "w0_s(R^n) != 0"},
                              {std::abs(right) - curv_allow, last, "w0_ss(R^n) != 0"}};
        c.passed = true;
        for (const auto& item : items) {
            if (item.excess > 0.0 && item.excess >= c.violation) {
                c.passed = false;
                c.violation = item.excess;
                c.worst_node = item.node;
                c.detail = item.what;
            }
        }
    }

    if (moment) {
        auto& c = report.concentrated;
        c.evaluated = true;
        const double needed = moment->m0 / p.omega_n;
        const double have = discrete::interpolate(grid, w, moment->s0);
        c.passed = have >= needed - tol.boundary * top;
        c.violation = std::max(0.0, needed - have);
        const auto nodes = grid.nodes();
        c.worst_node = static_cast<std::size_t>(
            std::lower_bound(nodes.begin(), nodes.end(), moment->s0) - nodes.begin());
        c.detail = "w0(s0) >= m0/omega_n";
    }
    return report;
}

/**
 * w_{0,eps}(s) = w0(R^n (s - eps) / (R^n - eps)) on [eps, R^n].
 *
 * Nodes: eps itself plus every node of w0's grid lying beyond eps by at least
 * a quarter of the local spacing, so members of an eps-family share nodes.
 */
inline WProfile regularized_initial(const WInitial& w0, double eps) {
    const auto& grid = w0.profile.grid;
    const double extent = grid.upper();
    if (!(eps > 0.0) || !(eps < extent)) {
        throw DomainError("regularized_initial: eps must lie in (0, R^n)");
    }
    std::vector<double> nodes{eps};
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] > eps + 0.25 * grid.spacing(i - 1)) {
            nodes.push_back(grid[i]);
        }
    }
    if (nodes.size() < 3) {
        throw DomainError("regularized_initial: eps leaves fewer than 3 nodes");
    }
    std::vector<double> values(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double arg = extent * (nodes[j] - eps) / (extent - eps);
        values[j] = discrete::interpolate(grid, w0.profile.values, arg);
    }
    values.front() = 0.0;
    values.back() = w0.profile.values.back();
    return WProfile(SGrid(std::move(nodes), grid.grading(), 1e6), std::move(values), 0.0);
}

}  // namespace degenchem
