#pragma once

/**
 * @file transform.hpp
 * @brief Change of variables between the radial pair (u, v_r) and the mass
 *        accumulation function w(s) = int_0^{s^(1/n)} rho^(n-1) u(rho) d rho.
 *
 * Densities given on r-nodes are treated as piecewise linear in rho (constant
 * on [0, r_0]); every radial quadrature below is exact for that representation.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/profile.hpp"

namespace degenchem {

namespace detail {

/// int_a^b rho^(n-1) * l(rho) d rho for the linear l with l(a) = ua, l(b) = ub.
/// Expanded around a so that every term is positive (no cancellation on thin cells).
inline double weighted_linear_integral(int n, double a, double b, double ua, double ub) {
    const double h = b - a;
    double ia = 0.0;  // int rho^(n-1) (1 - t) , t = (rho - a)/h
    double ib = 0.0;  // int rho^(n-1) t
    double binom = 1.0;
    double hk = 1.0;
    const int k_max = n - 1;
    for (int k = 0; k <= k_max; ++k) {
        const double term = binom * std::pow(a, k_max - k) * hk;
        ib += term / (k + 2);
        ia += term / ((k + 1.0) * (k + 2.0));
        binom = binom * (k_max - k) / (k + 1);
        hk *= h;
    }
    return h * (ua * ia + ub * ib);
}

/// Cumulative int_0^{r_k} rho^(n-1) u d rho at every node of a piecewise-linear density.
inline std::vector<double> cumulative_radial_mass(const RadialProfile& u) {
    const int n = u.params.n;
    std::vector<double> cum(u.size());
    cum[0] = u.values[0] * std::pow(u.r[0], n) / n;
    for (std::size_t k = 1; k < u.size(); ++k) {
        cum[k] = cum[k - 1] +
                 weighted_linear_integral(n, u.r[k - 1], u.r[k], u.values[k - 1], u.values[k]);
    }
    return cum;
}

/// int_0^r rho^(n-1) u d rho for r anywhere in [0, r_last].
inline double radial_mass_up_to(const RadialProfile& u, const std::vector<double>& cum, double r) {
    const int n = u.params.n;
    if (r <= 0.0) {
        return 0.0;
    }
    if (r <= u.r[0]) {
        return u.values[0] * std::pow(r, n) / n;
    }
    const auto it = std::upper_bound(u.r.begin(), u.r.end(), r);
    if (it == u.r.end()) {
        return cum.back();
    }
    const auto hi = static_cast<std::size_t>(it - u.r.begin());
    const std::size_t lo = hi - 1;
    const double t = (r - u.r[lo]) / (u.r[hi] - u.r[lo]);
    const double ur = u.values[lo] + t * (u.values[hi] - u.values[lo]);
    return cum[lo] + weighted_linear_integral(n, u.r[lo], r, u.values[lo], ur);
}

inline void require_full_ball_grid(const SGrid& grid, const Params& p, const char* who) {
    const double extent = p.volume_extent();
    if (grid.lower() != 0.0 || std::abs(grid.upper() - extent) > 1e-12 * extent) {
        throw DomainError(std::string(who) + ": grid must span [0, R^n]");
    }
}

}  // namespace detail

/// w0(s) at every grid node for a density given on r-nodes.
inline WProfile accumulate(const RadialProfile& u0, const SGrid& grid) {
    const Params& p = u0.params;
    detail::require_full_ball_grid(grid, p, "accumulate");
    if (u0.r.back() < p.R * (1.0 - 1e-12)) {
        throw DomainError("accumulate: density must be given up to r = R");
    }
    const auto cum = detail::cumulative_radial_mass(u0);
    std::vector<double> w(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double r = std::pow(grid[j], 1.0 / p.n);
        w[j] = detail::radial_mass_up_to(u0, cum, r);
    }
    return WProfile(grid, std::move(w), 0.0);
}

/// w0(s) for a density given as a function of r, by 8-point Gauss-Legendre per rho-cell.
inline WProfile accumulate(const std::function<double(double)>& u0, const Params& p, const SGrid& grid) {
    detail::require_full_ball_grid(grid, p, "accumulate");
    static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290,
                                                0.7966664774136267, 0.9602898564975363};
    static constexpr std::array<double, 4> wt = {0.3626837833783620, 0.3137066458778873,
                                                 0.2223810344533745, 0.1012285362903763};
    std::vector<double> w(grid.size(), 0.0);
    double r_prev = 0.0;
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double r = std::pow(grid[j], 1.0 / p.n);
        const double mid = 0.5 * (r + r_prev);
        const double half = 0.5 * (r - r_prev);
        double acc = 0.0;
        for (std::size_t q = 0; q < x.size(); ++q) {
            for (const double sign : {-1.0, 1.0}) {
                const double rho = mid + sign * half * x[q];
                acc += wt[q] * std::pow(rho, p.n - 1) * u0(rho);
            }
        }
        w[j] = w[j - 1] + half * acc;
        r_prev = r;
    }
    return WProfile(grid, std::move(w), 0.0);
}

/// u(r) = n w_s(r^n) at every node except s = 0 (end nodes use limited one-sided stencils).
inline RadialProfile density_from_w(const WProfile& w, const Params& p) {
    if (w.size() < 3) {
        throw DomainError("density_from_w: at least 3 nodes required");
    }
    const std::size_t first = w.grid.lower() == 0.0 ? 1 : 0;
    std::vector<double> r;
    std::vector<double> u;
    r.reserve(w.size() - first);
    u.reserve(w.size() - first);
    const std::size_t last = w.size() - 1;
    for (std::size_t i = first; i < w.size(); ++i) {
        double d = discrete::node_derivative(w.grid, w.values, i);
        if (i == 0 || i == last) {
            // One-sided stencils extrapolate; keep them between 0 and twice the end-cell
            // slope so monotone data never yield a negative density.
            const double slope = discrete::cell_slope(w.grid, w.values, i == 0 ? 0 : last - 1);
            d = std::clamp(d, std::min(0.0, 2.0 * slope), std::max(0.0, 2.0 * slope));
        }
        r.push_back(std::pow(w.grid[i], 1.0 / p.n));
        u.push_back(p.n * d);
    }
    return RadialProfile(std::move(r), std::move(u), p);
}

/// Cellwise density n * (slope of w on the cell), placed at the cell's volume midpoint.
inline RadialProfile cell_density(const WProfile& w, const Params& p) {
    std::vector<double> r(w.size() - 1);
    std::vector<double> u(w.size() - 1);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        r[i] = std::pow(0.5 * (w.grid[i] + w.grid[i + 1]), 1.0 / p.n);
        u[i] = p.n * discrete::cell_slope(w.grid, w.values, i);
    }
    return RadialProfile(std::move(r), std::move(u), p);
}

/**
 * Mass of the retransformed density, omega_n int rho^(n-1) u d rho, with u
 * taken cellwise constant (u = n w_s on each cell). Each cell contributes
 * omega_n u (r_{i+1}^n - r_i^n)/n exactly.
 */
inline double retransformed_mass(const WProfile& w, const Params& p) {
    const auto u = cell_density(w, p);
    double mass = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        mass += u.values[i] * w.grid.spacing(i) / p.n;
    }
    return p.omega_n * mass;
}

/// v_r(r) = r^(1-n) (mu r^n / n - int_0^r rho^(n-1) u d rho) on the nodes of u.
inline RadialProfile signal_gradient(const RadialProfile& u, const Params& p) {
    const auto cum = detail::cumulative_radial_mass(u);
    std::vector<double> vr(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double r = u.r[k];
        vr[k] = (p.mu * std::pow(r, p.n) / p.n - cum[k]) / std::pow(r, p.n - 1);
    }
    return RadialProfile(u.r, std::move(vr), p);
}

/**
 * v from v_r: trapezoid antiderivative (v_r held constant on [0, r_0]),
 * shifted so that int_0^R v dr = 0.
 */
inline RadialProfile signal_reconstruct(const RadialProfile& vr) {
    const std::size_t n_nodes = vr.size();
    // Antiderivative anchored at r = 0.
    std::vector<double> v(n_nodes);
    v[0] = vr.values[0] * vr.r[0];
    for (std::size_t k = 1; k < n_nodes; ++k) {
        v[k] = v[k - 1] + 0.5 * (vr.values[k] + vr.values[k - 1]) * (vr.r[k] - vr.r[k - 1]);
    }
    // int_0^R of the piecewise-linear v, including the segment from (0, 0).
    double integral = 0.5 * v[0] * vr.r[0];
    for (std::size_t k = 1; k < n_nodes; ++k) {
        integral += 0.5 * (v[k] + v[k - 1]) * (vr.r[k] - vr.r[k - 1]);
    }
    const double shift = integral / vr.r.back();
    for (double& value : v) {
        value -= shift;
    }
    return RadialProfile(vr.r, std::move(v), vr.params);
}

/// C with |v_r(r)| <= C r: (2/n) sup |u|.
inline double signal_gradient_constant(const RadialProfile& u) {
    double sup = 0.0;
    for (const double value : u.values) {
        sup = std::max(sup, std::abs(value));
    }
    return 2.0 * sup / u.params.n;
}

/// sup |v_r(r)| / r over the nodes.
inline double signal_gradient_ratio(const RadialProfile& vr) {
    double sup = 0.0;
    for (std::size_t k = 0; k < vr.size(); ++k) {
        sup = std::max(sup, std::abs(vr.values[k]) / vr.r[k]);
    }
    return sup;
}

/// omega_n * w(R^n).
inline double total_mass(const WProfile& w, const Params& p) { return p.omega_n * w.values.back(); }

}  // namespace degenchem
