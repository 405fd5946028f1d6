#pragma once

/**
 * @file moment.hpp
 * @brief Product integration of piecewise-linear w against the singular
 *        weight s^(-gamma), used for
 *          y  = int_0^{s1} s^(-gamma) (s1 - s) w ds
 *          q  = int_0^{s1} s^(-gamma) w^2 ds.
 *
 * On each cell w = alpha + beta s exactly, so both integrals reduce to the
 * closed forms int_a^b s^(k - gamma) ds, k = 0, 1, 2.
 */

#include <cmath>
#include <cstddef>

#include "degenchem/domain.hpp"
#include "degenchem/profile.hpp"

namespace degenchem {

namespace detail {

/// b^p - a^p for 0 <= a < b, p > 0, without cancellation when b is close to a.
inline double power_difference(double b, double a, double p) {
    if (a == 0.0) {
        return std::pow(b, p);
    }
    return std::pow(a, p) * std::expm1(p * std::log1p((b - a) / a));
}

struct CellPowers {
    double j0, j1, j2;  // int_a^b s^(k - gamma) ds
};

inline CellPowers cell_powers(double a, double b, double gamma) {
    return {power_difference(b, a, 1.0 - gamma) / (1.0 - gamma),
            power_difference(b, a, 2.0 - gamma) / (2.0 - gamma),
            power_difference(b, a, 3.0 - gamma) / (3.0 - gamma)};
}

/// Calls f(a, b, wa, wb) for every cell of [lower, s1], the last one clipped at s1.
template <typename F>
void for_each_cell_until(const WProfile& w, double s1, F&& f) {
    const auto& g = w.grid;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const double a = g[i];
        if (a >= s1) {
            break;
        }
        double b = g[i + 1];
        double wb = w.values[i + 1];
        if (b > s1) {
            wb = w.values[i] + (w.values[i + 1] - w.values[i]) * (s1 - a) / (b - a);
            b = s1;
        }
        f(a, b, w.values[i], wb);
    }
}

inline void require_moment_args(const WProfile& w, double gamma, double s1) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw DomainError("moment: gamma must lie in (0, 1)");
    }
    if (!(s1 > 0.0)) {
        throw DomainError("moment: s1 must be positive");
    }
    if (s1 > w.grid.upper() * (1.0 + 1e-14)) {
        throw DomainError("moment: s1 exceeds R^n");
    }
}

}  // namespace detail

/// y = int_0^{s1} s^(-gamma) (s1 - s) w(s) ds, exact for piecewise-linear w.
inline double moment(const WProfile& w, double gamma, double s1) {
    detail::require_moment_args(w, gamma, s1);
    double total = 0.0;
    detail::for_each_cell_until(w, s1, [&](double a, double b, double wa, double wb) {
        const double beta = (wb - wa) / (b - a);
        const double alpha = wa - beta * a;
        const auto j = detail::cell_powers(a, b, gamma);
        total += s1 * alpha * j.j0 + (s1 * beta - alpha) * j.j1 - beta * j.j2;
    });
    return total;
}

/// int_0^{s1} s^(-gamma) w(s)^2 ds, exact for piecewise-linear w.
inline double weighted_square_integral(const WProfile& w, double gamma, double s1) {
    detail::require_moment_args(w, gamma, s1);
    double total = 0.0;
    detail::for_each_cell_until(w, s1, [&](double a, double b, double wa, double wb) {
        const double beta = (wb - wa) / (b - a);
        const double alpha = wa - beta * a;
        const auto j = detail::cell_powers(a, b, gamma);
        total += alpha * alpha * j.j0 + 2.0 * alpha * beta * j.j1 + beta * beta * j.j2;
    });
    return total;
}

}  // namespace degenchem
