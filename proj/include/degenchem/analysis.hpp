#pragma once

/**
 * @file analysis.hpp
 * @brief Checkers and the finite-time blow-up certificate.
 *
 * Riccati supersolution y' = n y^2, the singular moment machinery
 * (gamma, c1..c3, s0/s1 thresholds, lower ODE), and nodewise checks for
 * comparison, concavity and Cauchy-Schwarz consistency.
 *
 * "certified" is a consistency certificate: the hypotheses were verified on
 * the discrete data and the computed dynamics behaved as the moment argument
 * predicts. It is not a computer-assisted proof.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/moment.hpp"
#include "degenchem/moment_config.hpp"
#include "degenchem/profile.hpp"
#include "degenchem/solver.hpp"

namespace degenchem {

// ---------------------------------------------------------------------------
// Riccati supersolution

struct RiccatiValue {
    double y = 0.0;
    double blowup_time = 0.0;
};

/// y(t) = y0 / (1 - n y0 t), T* = 1 / (n y0).
inline RiccatiValue riccati(double y0, int n, double t) {
    if (!(y0 > 0.0)) {
        throw DomainError("riccati: y0 must be positive");
    }
    if (n < 1) {
        throw DomainError("riccati: n must be >= 1");
    }
    if (!(t >= 0.0)) {
        throw DomainError("riccati: t must be nonnegative");
    }
    const double blowup = 1.0 / (n * y0);
    if (t >= blowup) {
        throw DomainError("riccati: t is at or beyond the blow-up time 1/(n y0)");
    }
    return {y0 / (1.0 - n * y0 * t), blowup};
}

/// y0 = sup |w0_s| taken over cells.
inline double initial_slope_bound(const WProfile& w0) {
    return std::max(std::abs(discrete::max_cell_slope(w0.grid, w0.values)),
                    std::abs(discrete::min_cell_slope(w0.grid, w0.values)));
}

struct SupersolutionReport {
    bool passed = true;
    std::size_t snapshots_checked = 0;
    /// min over checked nodes of y(t) s - w(s, t); negative means violated.
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_time = 0.0;
    double worst_s = 0.0;
    double blowup_time = 0.0;
};

/// Checks w(s, t) <= y(t) s + tol at every node of snapshots with t <= horizon * T* (horizon < 1).
inline SupersolutionReport check_supersolution(const EvolutionResult& run, double y0, const Params& p,
                                               double tol = 1e-8, double horizon = 0.95) {
    if (!(horizon > 0.0 && horizon < 1.0)) {
        throw DomainError("check_supersolution: horizon must lie in (0, 1)");
    }
    SupersolutionReport report;
    report.blowup_time = 1.0 / (p.n * y0);
    for (const auto& snap : run.snapshots) {
        if (!(snap.time <= horizon * report.blowup_time)) {
            continue;
        }
        const double y = riccati(y0, p.n, snap.time).y;
        ++report.snapshots_checked;
        for (std::size_t i = 0; i < snap.size(); ++i) {
            const double margin = y * snap.grid[i] - snap.values[i];
            if (margin < report.worst_margin) {
                report.worst_margin = margin;
                report.worst_time = snap.time;
                report.worst_s = snap.grid[i];
            }
        }
    }
    report.passed = report.snapshots_checked > 0 && report.worst_margin >= -tol;
    return report;
}

// ---------------------------------------------------------------------------
// Moment constants and thresholds

/// gamma = min(1 - 2/n + beta/n, 0.9).
inline double choose_gamma(int n, double beta) {
    if (n < 1) {
        throw DomainError("choose_gamma: n must be >= 1");
    }
    const double bound = 1.0 - 2.0 / n + beta / n;
    if (!(bound > 0.0)) {
        throw DomainError("choose_gamma: requires beta > 2 - n");
    }
    return std::min(bound, 0.9);
}

struct MomentConstants {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

inline MomentConstants moment_constants(int n, double beta, double gamma, double omega_n) {
    if (!(gamma > 0.0 && gamma < 1.0)) {
        throw DomainError("moment_constants: gamma must lie in (0, 1)");
    }
    if (!(omega_n > 0.0)) {
        throw DomainError("moment_constants: omega_n must be positive");
    }
    const double nn = n;
    const double a = 2.0 - 2.0 / nn + beta / nn - gamma;
    const double denom = 3.0 - 4.0 / nn + 2.0 * beta / nn - gamma;
    if (!(denom > 0.0)) {
        throw DomainError("moment_constants: 3 - 4/n + 2 beta/n - gamma must be positive");
    }
    MomentConstants c;
    c.c1 = 8.0 * a * a * nn * nn * nn / denom;
    c.c2 = 2.0 * nn / ((3.0 - gamma) * omega_n * omega_n);
    c.c3 = (3.0 / (4.0 * omega_n)) * (1.0 / (1.0 - gamma) - 1.0 / (2.0 - gamma));
    return c;
}

struct Thresholds {
    double s0 = 0.0;
    double s1 = 0.0;
    /// s0^(1/n): radius of the ball that must hold mass m0.
    double r0 = 0.0;
    /// Largest s1 allowed by each inequality separately.
    double bound_diffusion = 0.0;
    double bound_drift = 0.0;
};

/// Exponent 2 - 4/n + 2 beta/n of s1 in the diffusion-side threshold.
inline double threshold_exponent(const Params& p) { return 2.0 - 4.0 / p.n + 2.0 * p.beta / p.n; }

/// Largest s1 < R^n satisfying both threshold inequalities; s0 = s1 / 2.
inline Thresholds choose_thresholds(const Params& p, double m0, const MomentConstants& c, double gamma) {
    if (!(m0 > 0.0) || m0 > p.m * (1.0 + 1e-14)) {
        throw DomainError("choose_thresholds: m0 must lie in (0, m]");
    }
    const double e = threshold_exponent(p);
    if (!(e > 0.0)) {
        throw DomainError("choose_thresholds: exponent 2 - 4/n + 2 beta/n must be positive");
    }
    const double extent = p.volume_extent();
    const double k = (1.0 - gamma) * c.c3 * c.c3 * m0 * m0;
    Thresholds t;
    t.bound_diffusion = std::pow(k / (p.n * c.c1), 1.0 / e);
    t.bound_drift = std::sqrt(k * extent * extent / (p.n * c.c2 * p.m * p.m));
    t.s1 = std::min({t.bound_diffusion, t.bound_drift, extent * (1.0 - 1e-6)});
    t.s0 = 0.5 * t.s1;
    t.r0 = std::pow(t.s0, 1.0 / p.n);
    return t;
}

/// gamma (chosen or overridden), constants and thresholds for mass m0.
inline MomentConfig make_moment_config(const Params& p, double m0, std::optional<double> gamma_override = {}) {
    const double gamma = gamma_override.value_or(choose_gamma(p.n, p.beta));
    const auto c = moment_constants(p.n, p.beta, gamma, p.omega_n);
    const auto t = choose_thresholds(p, m0, c, gamma);
    MomentConfig cfg;
    cfg.gamma = gamma;
    cfg.s0 = t.s0;
    cfg.s1 = t.s1;
    cfg.c1 = c.c1;
    cfg.c2 = c.c2;
    cfg.c3 = c.c3;
    cfg.m0 = m0;
    return cfg;
}

/// Coefficients of the lower ODE ybar' = A ybar^2 - D.
struct LowerOdeCoefficients {
    double A = 0.0;
    double D = 0.0;
};

inline LowerOdeCoefficients lower_ode_coefficients(const MomentConfig& cfg, const Params& p) {
    const double s1 = cfg.s1;
    const double g = cfg.gamma;
    const double extent = p.volume_extent();
    LowerOdeCoefficients k;
    k.A = 4.0 * (1.0 - g) / p.n * std::pow(s1, g - 3.0);
    k.D = cfg.c1 * std::pow(s1, 3.0 - 4.0 / p.n + 2.0 * p.beta / p.n - g) +
          cfg.c2 * p.m * p.m / (extent * extent) * std::pow(s1, 3.0 - g);
    return k;
}

/// Drain over half the quadratic rate at y0; the lower ODE argument needs <= 1.
inline double ratio_condition(const MomentConfig& cfg, const Params& p, double y0) {
    const auto k = lower_ode_coefficients(cfg, p);
    const double half_rate = 0.5 * k.A * y0 * y0;
    if (half_rate == 0.0) {
        return k.D > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    return k.D / half_rate;
}

struct LowerOdeSolution {
    LowerOdeCoefficients coefficients;
    double y0 = 0.0;
    double ratio = 0.0;
    bool ratio_ok = false;
    /// Numerical trajectory (t, ybar), up to ybar > 1e12 or the horizon.
    std::vector<std::pair<double, double>> trajectory;
    /// Blow-up time from the integrator (time at which ybar passed 1e12).
    std::optional<double> blowup_time;
    /// Blow-up time by partial fractions.
    std::optional<double> closed_form_blowup_time;

    /// Closed-form ybar(t); +inf at and beyond the blow-up time.
    [[nodiscard]] double value(double t) const {
        const double A = coefficients.A;
        const double D = coefficients.D;
        if (D == 0.0) {
            const double denom = 1.0 - A * y0 * t;
            return denom > 0.0 ? y0 / denom : std::numeric_limits<double>::infinity();
        }
        const double k = std::sqrt(D / A);
        const double lambda = std::sqrt(A * D);
        // Q = (y - k)/(y + k) evolves as Q0 exp(2 lambda t).
        const double q = (y0 - k) / (y0 + k) * std::exp(2.0 * lambda * t);
        if (q >= 1.0) {
            return std::numeric_limits<double>::infinity();
        }
        return k * (1.0 + q) / (1.0 - q);
    }
};

/**
 * Integrates ybar' = A ybar^2 - D, ybar(0) = y0 with RK4. The step is halved
 * (from the initial h) whenever one step would change ybar by more than 0.1%,
 * which tracks the 1/(T - t) growth near blow-up. Stops at ybar > 1e12, at
 * ybar < 0, or at `horizon`.
 */
inline LowerOdeSolution lower_ode(double y0, const MomentConfig& cfg, const Params& p,
                                  double horizon = std::numeric_limits<double>::infinity()) {
    LowerOdeSolution sol;
    sol.coefficients = lower_ode_coefficients(cfg, p);
    sol.y0 = y0;
    sol.ratio = ratio_condition(cfg, p, y0);
    sol.ratio_ok = sol.ratio <= 1.0;
    const double A = sol.coefficients.A;
    const double D = sol.coefficients.D;

    if (D == 0.0) {
        if (y0 > 0.0) {
            sol.closed_form_blowup_time = 1.0 / (A * y0);
        }
    } else if (y0 > std::sqrt(D / A)) {
        const double k = std::sqrt(D / A);
        sol.closed_form_blowup_time = std::log((y0 + k) / (y0 - k)) / (2.0 * std::sqrt(A * D));
    }

    const auto rhs = [&](double y) { return A * y * y - D; };
    double h;
    if (sol.closed_form_blowup_time) {
        h = *sol.closed_form_blowup_time / 1024.0;
    } else {
        const double rate = std::abs(rhs(y0));
        h = rate > 0.0 ? 1e-3 * std::max(std::abs(y0), std::sqrt(D / A)) / rate : 1.0;
    }
    if (std::isfinite(horizon)) {
        h = std::min(h, horizon / 1024.0);
    }
    double t = 0.0;
    double y = y0;
    sol.trajectory.emplace_back(t, y);
    constexpr double cap = 1e12;
    for (std::size_t iter = 0; iter < 1'000'000; ++iter) {
        if (y > cap) {
            sol.blowup_time = t;
            break;
        }
        if (y < 0.0 || t >= horizon) {
            break;
        }
        if (!sol.closed_form_blowup_time && t > 1e3 * h && std::abs(rhs(y)) < 1e-300) {
            break;
        }
        double step = std::min(h, horizon - t);
        double next = y;
        for (;;) {
            const double k1 = rhs(y);
            const double k2 = rhs(y + 0.5 * step * k1);
            const double k3 = rhs(y + 0.5 * step * k2);
            const double k4 = rhs(y + step * k3);
            next = y + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (std::isfinite(next) && std::abs(next - y) <= 1e-3 * std::max(std::abs(y), 1e-300)) {
                break;
            }
            step *= 0.5;
            h = step;
            if (step < 1e-300) {
                break;
            }
        }
        t += step;
        y = next;
        sol.trajectory.emplace_back(t, y);
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Blow-up certificate

enum class Verdict { Certified, HypothesesNotMet, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::HypothesesNotMet: return "hypotheses-not-met";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct CertificateCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;
    std::string detail;
};

struct BlowupCertificate {
    MomentConfig config;
    double y0 = 0.0;
    double required_y0 = 0.0;
    double ratio = 0.0;
    std::optional<double> lower_ode_blowup_time;
    std::optional<double> lower_ode_blowup_time_integrated;
    /// (t, y(t), ybar(t)) at every snapshot.
    std::vector<std::pair<double, double>> moment_series;
    std::vector<double> lower_series;
    std::vector<CertificateCheck> checks;
    Verdict verdict = Verdict::Inconclusive;
    std::string first_failure;
    double termination_time = 0.0;
    Termination termination = Termination::ReachedEnd;
    /// termination_time / T; the acceptance tolerance on timing is 1.1.
    std::optional<double> timing_ratio;
};

namespace detail {

inline bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

}  // namespace detail

/**
 * Checks, in order:
 *  (a) config invariants and concentration of w0 -> hypotheses-not-met
 *  (b) y(0) >= c3 m0 s1^(2-gamma)                   -> hypotheses-not-met
 *  (c) ratio condition <= 1                         -> inconclusive
 *  (d) sampled moment satisfies the integral inequality and dominates the
 *      lower ODE; run ended at the gradient threshold before T -> else inconclusive
 */
inline BlowupCertificate certify_blowup(const EvolutionResult& run, const WInitial& w0, const MomentConfig& cfg,
                                        const Params& p) {
    BlowupCertificate cert;
    cert.config = cfg;
    cert.termination = run.termination;
    cert.termination_time = run.final_time;
    const double extent = p.volume_extent();
    constexpr double rel = 1e-12;

    const auto record = [&](std::string name, bool ok, double value, std::string detail) {
        cert.checks.push_back({std::move(name), ok, value, std::move(detail)});
        if (!ok && cert.first_failure.empty()) {
            cert.first_failure = cert.checks.back().name;
        }
        return ok;
    };

    // (a)
    bool hyp = true;
    const double gamma_bound = 1.0 - 2.0 / p.n + p.beta / p.n;
    hyp &= record("gamma_range", cfg.gamma > 0.0 && cfg.gamma < 1.0 && cfg.gamma <= gamma_bound * (1.0 + rel),
                  cfg.gamma, "0 < gamma < 1, gamma <= 1 - 2/n + beta/n");
    hyp &= record("m0_range", cfg.m0 > 0.0 && cfg.m0 <= p.m * (1.0 + rel), cfg.m0, "0 < m0 <= m");
    hyp &= record("s1_eq_2s0", detail::close_rel(cfg.s1, 2.0 * cfg.s0, rel) && cfg.s0 > 0.0 && cfg.s0 < 0.5 * extent,
                  cfg.s1, "s1 = 2 s0, 0 < s0 < R^n/2");
    const bool gamma_ok = cfg.gamma > 0.0 && cfg.gamma < 1.0 && threshold_exponent(p) > 0.0;
    if (gamma_ok) {
        const auto c = moment_constants(p.n, p.beta, cfg.gamma, p.omega_n);
        hyp &= record("constants", detail::close_rel(c.c1, cfg.c1, 1e-10) && detail::close_rel(c.c2, cfg.c2, 1e-10) &&
                                       detail::close_rel(c.c3, cfg.c3, 1e-10),
                      cfg.c1, "c1, c2, c3 match their defining formulas");
        const double k = (1.0 - cfg.gamma) * cfg.c3 * cfg.c3 * cfg.m0 * cfg.m0;
        const double lhs3 = std::pow(cfg.s1, threshold_exponent(p));
        const double rhs3 = k / (p.n * cfg.c1);
        hyp &= record("threshold_diffusion", lhs3 <= rhs3 * (1.0 + rel), lhs3 / rhs3,
                      "s1^(2-4/n+2beta/n) <= (1-gamma) c3^2 m0^2 / (n c1)");
        const double lhs4 = cfg.s1 * cfg.s1;
        const double rhs4 = k * extent * extent / (p.n * cfg.c2 * p.m * p.m);
        hyp &= record("threshold_drift", lhs4 <= rhs4 * (1.0 + rel), lhs4 / rhs4,
                      "s1^2 <= (1-gamma) c3^2 m0^2 R^(2n) / (n c2 m^2)");
    } else {
        hyp &= record("constants", false, cfg.gamma, "gamma or threshold exponent out of range");
    }
    if (!hyp) {
        cert.verdict = Verdict::HypothesesNotMet;
        return cert;
    }
    const auto report = validate(w0, p, cfg);
    hyp &= record("w0_admissible", report.boundary_and_monotone.passed, report.boundary_and_monotone.violation,
                  report.boundary_and_monotone.detail);
    hyp &= record("concentration", report.concentrated.passed, report.concentrated.violation,
                  "w0(s0) >= m0/omega_n");
    if (!hyp) {
        cert.verdict = Verdict::HypothesesNotMet;
        return cert;
    }

    // (b)
    cert.y0 = moment(w0.profile, cfg.gamma, cfg.s1);
    cert.required_y0 = cfg.c3 * cfg.m0 * std::pow(cfg.s1, 2.0 - cfg.gamma);
    if (!record("initial_moment", cert.y0 >= cert.required_y0 * (1.0 - rel), cert.y0 / cert.required_y0,
                "y(0) >= c3 m0 s1^(2-gamma)")) {
        cert.verdict = Verdict::HypothesesNotMet;
        return cert;
    }

    // (c)
    cert.ratio = ratio_condition(cfg, p, cert.y0);
    const auto ode = lower_ode(cert.y0, cfg, p);
    cert.lower_ode_blowup_time = ode.closed_form_blowup_time;
    cert.lower_ode_blowup_time_integrated = ode.blowup_time;
    if (!record("ratio_condition", cert.ratio <= 1.0, cert.ratio, "drain / ((2(1-gamma)/n) s1^(gamma-3) y0^2) <= 1")) {
        cert.verdict = Verdict::Inconclusive;
        return cert;
    }

    // (d)
    for (const auto& snap : run.snapshots) {
        if (snap.grid.lower() != 0.0) {
            record("moment_series", false, snap.time, "run is not on [0, R^n]");
            cert.verdict = Verdict::Inconclusive;
            return cert;
        }
        cert.moment_series.emplace_back(snap.time, moment(snap, cfg.gamma, cfg.s1));
        cert.lower_series.push_back(ode.value(snap.time));
    }
    const auto coeff = ode.coefficients;
    double integral = 0.0;
    double worst_integral = std::numeric_limits<double>::infinity();
    double worst_domination = std::numeric_limits<double>::infinity();
    const double y_initial = cert.moment_series.empty() ? cert.y0 : cert.moment_series.front().second;
    for (std::size_t i = 0; i < cert.moment_series.size(); ++i) {
        const auto [t, y] = cert.moment_series[i];
        if (i > 0) {
            const auto [tp, yp] = cert.moment_series[i - 1];
            integral += 0.5 * (t - tp) * (y * y + yp * yp);
        }
        const double bound = y_initial + coeff.A * integral - coeff.D * t;
        const double scale = std::max({std::abs(y), std::abs(y_initial), coeff.A * integral});
        worst_integral = std::min(worst_integral, (y - bound) / scale);
        const double lower = cert.lower_series[i];
        if (std::isfinite(lower)) {
            worst_domination = std::min(worst_domination, (y - lower) / std::max(std::abs(y), std::abs(lower)));
        } else {
            worst_domination = -std::numeric_limits<double>::infinity();
        }
    }
    bool dyn = true;
    dyn &= record("integral_inequality", worst_integral >= -1e-9, worst_integral,
                  "y(t) >= y(0) + A int y^2 - D t (trapezoid), worst relative margin");
    dyn &= record("lower_ode_domination", worst_domination >= -1e-9, worst_domination,
                  "y(t) >= ybar(t) at every sample, worst relative margin");
    const double T = ode.closed_form_blowup_time.value_or(std::numeric_limits<double>::infinity());
    if (std::isfinite(T)) {
        cert.timing_ratio = run.final_time / T;
    }
    dyn &= record("gradient_threshold_before_T",
                  run.termination == Termination::GradientThreshold && run.final_time <= T, run.final_time,
                  std::string("termination=") + to_string(run.termination));
    cert.verdict = dyn ? Verdict::Certified : Verdict::Inconclusive;
    return cert;
}

// ---------------------------------------------------------------------------
// Nodewise checkers

struct ComparisonReport {
    bool passed = true;
    /// max over nodes and shared times of lower - upper (<= 0 when ordered).
    double worst_violation = -std::numeric_limits<double>::infinity();
    double worst_time = 0.0;
    double worst_s = 0.0;
    std::size_t times_checked = 0;
};

/// Ordering of two runs on identical grids and snapshot times.
inline ComparisonReport check_comparison(const EvolutionResult& lower, const EvolutionResult& upper,
                                         double tol = 1e-8) {
    if (lower.snapshots.size() != upper.snapshots.size()) {
        throw DomainError("check_comparison: runs have different snapshot counts");
    }
    ComparisonReport report;
    for (std::size_t k = 0; k < lower.snapshots.size(); ++k) {
        const auto& a = lower.snapshots[k];
        const auto& b = upper.snapshots[k];
        if (!a.grid.same_nodes(b.grid)) {
            throw DomainError("check_comparison: runs use different grids");
        }
        if (a.time != b.time) {
            throw DomainError("check_comparison: runs have different snapshot times");
        }
        ++report.times_checked;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a.values[i] - b.values[i];
            if (d > report.worst_violation) {
                report.worst_violation = d;
                report.worst_time = a.time;
                report.worst_s = a.grid[i];
            }
        }
    }
    report.passed = report.worst_violation <= tol;
    return report;
}

/// Ordering of a run below an explicit upper function upper(s, t).
inline ComparisonReport check_comparison(const EvolutionResult& lower,
                                         const std::function<double(double, double)>& upper, double tol = 1e-8) {
    ComparisonReport report;
    for (const auto& a : lower.snapshots) {
        ++report.times_checked;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a.values[i] - upper(a.grid[i], a.time);
            if (d > report.worst_violation) {
                report.worst_violation = d;
                report.worst_time = a.time;
                report.worst_s = a.grid[i];
            }
        }
    }
    report.passed = report.worst_violation <= tol;
    return report;
}

/**
 * Largest three-point second difference in units of (m/omega_n)/R^(2n),
 * i.e. w_ss R^(2n) / w(R^n). Concave profiles give <= 0 (up to rounding).
 */
inline discrete::ConcavityMeasure check_concavity(const WProfile& w) {
    if (w.size() < 3) {
        throw DomainError("check_concavity: at least 3 nodes required");
    }
    const double top = w.values.back();
    const double extent = w.grid.upper();
    const double scale = top > 0.0 ? extent * extent / top : extent * extent;
    return discrete::max_second_difference(w.grid, w.values, scale);
}

/**
 * Relative slack of y^2 <= (int s^-gamma w^2) s1^(3-gamma)/(1-gamma):
 * (rhs - lhs) / rhs, or 0 when both sides vanish.
 */
inline double cauchy_schwarz_slack(const WProfile& w, double gamma, double s1) {
    const double y = moment(w, gamma, s1);
    const double rhs = weighted_square_integral(w, gamma, s1) * std::pow(s1, 3.0 - gamma) / (1.0 - gamma);
    const double lhs = y * y;
    if (rhs == 0.0) {
        return lhs == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    return (rhs - lhs) / rhs;
}

}  // namespace degenchem
