#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "degenchem/domain.hpp"

namespace degenchem {

/// Snapshot of the mass accumulation function w(s, t) on an s-grid.
struct WProfile {
    SGrid grid;
    std::vector<double> values;
    double time = 0.0;

    WProfile(SGrid g, std::vector<double> v, double t = 0.0)
        : grid(std::move(g)), values(std::move(v)), time(t) {
        if (values.size() != grid.size()) {
            throw DomainError("WProfile: value count does not match grid size");
        }
    }

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

/// Radial snapshot (density u, signal gradient v_r or signal v) on r-nodes in (0, R].
struct RadialProfile {
    std::vector<double> r;
    std::vector<double> values;
    Params params;

    RadialProfile(std::vector<double> radii, std::vector<double> v, Params p)
        : r(std::move(radii)), values(std::move(v)), params(p) {
        if (r.size() != values.size()) {
            throw DomainError("RadialProfile: value count does not match node count");
        }
        if (r.empty()) {
            throw DomainError("RadialProfile: no nodes");
        }
        if (!(r.front() > 0.0)) {
            throw DomainError("RadialProfile: radii must lie in (0, R]");
        }
        for (std::size_t i = 1; i < r.size(); ++i) {
            if (!(r[i] > r[i - 1])) {
                throw DomainError("RadialProfile: radii must be strictly increasing");
            }
        }
        if (r.back() > params.R * (1.0 + 1e-12)) {
            throw DomainError("RadialProfile: radii must lie in (0, R]");
        }
    }

    [[nodiscard]] std::size_t size() const { return values.size(); }
};

namespace discrete {

/// Slope of the piecewise-linear interpolant on cell i.
inline double cell_slope(const SGrid& g, std::span<const double> w, std::size_t i) {
    return (w[i + 1] - w[i]) / g.spacing(i);
}

inline double min_cell_slope(const SGrid& g, std::span<const double> w) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        lo = std::min(lo, cell_slope(g, w, i));
    }
    return lo;
}

inline double max_cell_slope(const SGrid& g, std::span<const double> w) {
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        hi = std::max(hi, cell_slope(g, w, i));
    }
    return hi;
}

/// Three-point divided second difference at interior node i (nonuniform grid).
inline double second_difference(const SGrid& g, std::span<const double> w, std::size_t i) {
    const double hm = g.spacing(i - 1);
    const double hp = g.spacing(i);
    return 2.0 * ((w[i + 1] - w[i]) / hp - (w[i] - w[i - 1]) / hm) / (hm + hp);
}

/**
 * Floating-point uncertainty of second_difference at node i: the stored
 * values carry relative rounding error, which the divided difference
 * amplifies by 1/h^2 on fine cells.
 */
inline double second_difference_roundoff(const SGrid& g, std::span<const double> w, std::size_t i) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double hm = g.spacing(i - 1);
    const double hp = g.spacing(i);
    const double mag = std::abs(w[i - 1]) + 2.0 * std::abs(w[i]) + std::abs(w[i + 1]);
    return 8.0 * eps * mag * 2.0 / ((hm + hp) * std::min(hm, hp));
}

struct ConcavityMeasure {
    /// Largest scaled second difference; <= 0 for a concave profile.
    double worst = -std::numeric_limits<double>::infinity();
    std::size_t node = 0;
};

/**
 * Worst (largest) divided second difference over interior nodes, scaled by
 * `scale` (callers pass R^(2n) / (m / omega_n)). A positive difference is
 * reduced by its rounding uncertainty before it counts.
 */
inline ConcavityMeasure max_second_difference(const SGrid& g, std::span<const double> w, double scale) {
    ConcavityMeasure out;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        double d = second_difference(g, w, i);
        if (d > 0.0) {
            d = std::max(0.0, d - second_difference_roundoff(g, w, i));
        }
        d *= scale;
        if (d > out.worst) {
            out.worst = d;
            out.node = i;
        }
    }
    return out;
}

/// Second-order first derivative at node i (three-point, one-sided at the ends), in cell-slope form.
inline double node_derivative(const SGrid& g, std::span<const double> w, std::size_t i) {
    const std::size_t last = w.size() - 1;
    if (i == 0 || i == last) {
        const std::size_t near = i == 0 ? 0 : last - 1;
        const std::size_t far = i == 0 ? 1 : last - 2;
        const double h1 = g.spacing(near);
        const double h2 = g.spacing(far);
        const double s1 = cell_slope(g, w, near);
        return s1 + h1 / (h1 + h2) * (s1 - cell_slope(g, w, far));
    }
    const double hm = g.spacing(i - 1);
    const double hp = g.spacing(i);
    return (hp * cell_slope(g, w, i - 1) + hm * cell_slope(g, w, i)) / (hm + hp);
}

/// Piecewise-linear interpolation of node values; clamps outside the grid.
inline double interpolate(const SGrid& g, std::span<const double> w, double s) {
    const auto nodes = g.nodes();
    if (s <= nodes.front()) {
        return w.front();
    }
    if (s >= nodes.back()) {
        return w.back();
    }
    const auto it = std::upper_bound(nodes.begin(), nodes.end(), s);
    const auto hi = static_cast<std::size_t>(it - nodes.begin());
    const std::size_t lo = hi - 1;
    const double t = (s - nodes[lo]) / (nodes[hi] - nodes[lo]);
    return w[lo] + t * (w[hi] - w[lo]);
}

}  // namespace discrete
}  // namespace degenchem
