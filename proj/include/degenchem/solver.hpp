#pragma once

/**
 * @file solver.hpp
 * @brief Time integration of
 *
 *     w_t = n^2 s^(2-2/n+beta/n) w_ss + n w w_s - mu (s - eps) w_s   on (eps, R^n)
 *     w(eps, t) = 0,  w(R^n, t) = m / omega_n
 *
 * for eps > 0 (regularized problems) and eps = 0 (the degenerate problem).
 *
 * Diffusion uses a theta-scheme (tridiagonal solve); advection with speed
 * c = n w - mu (s - eps) is explicit first-order upwind, frozen at the current
 * state. Under the CFL bound the step map is monotone in w, so ordering,
 * range and slope sign are inherited from the data.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/moment.hpp"
#include "degenchem/profile.hpp"

namespace degenchem {

/// A time step could not be completed (singular solve, NaN, dt underflow).
class StepFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DtPolicy { Fixed, Cfl };

struct MomentProbe {
    double gamma = 0.5;
    double s1 = 0.0;
};

struct SolverConfig {
    double theta = 1.0;
    DtPolicy dt_policy = DtPolicy::Cfl;
    /// Step size for DtPolicy::Fixed.
    double dt = 1e-4;
    double cfl_safety = 0.5;
    /// Upper cap on CFL steps (the advection speed vanishes at stationary states).
    double dt_max = 1e-3;
    std::vector<double> eps_list;
    /// Abort once the largest discrete slope exceeds this; default 1e6 (m/omega_n)/R^n.
    std::optional<double> max_gradient;
    double t_end = 1.0;
    /// Keep every k-th step as a snapshot (initial and final state always kept).
    std::size_t snapshot_stride = 1;
    /// When > 0, snapshots are taken exactly at multiples of this interval instead.
    double snapshot_interval = 0.0;
    std::size_t max_steps = 10'000'000;
    /// Evaluate the singular moment after every step.
    std::optional<MomentProbe> moment;
    /// Run eps-family members on separate threads.
    bool parallel_family = false;

    void validate(const Params& p) const {
        if (!(theta >= 0.0 && theta <= 1.0)) {
            throw DomainError("SolverConfig: theta must lie in [0, 1]");
        }
        if (dt_policy == DtPolicy::Fixed && !(dt > 0.0)) {
            throw DomainError("SolverConfig: fixed dt must be positive");
        }
        if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
            throw DomainError("SolverConfig: cfl_safety must lie in (0, 1]");
        }
        if (!(dt_max > 0.0)) {
            throw DomainError("SolverConfig: dt_max must be positive");
        }
        if (!(t_end > 0.0)) {
            throw DomainError("SolverConfig: t_end must be positive");
        }
        if (snapshot_stride == 0) {
            throw DomainError("SolverConfig: snapshot_stride must be >= 1");
        }
        if (snapshot_interval < 0.0) {
            throw DomainError("SolverConfig: snapshot_interval must be nonnegative");
        }
        const double extent = p.volume_extent();
        for (std::size_t k = 0; k < eps_list.size(); ++k) {
            if (!(eps_list[k] > 0.0 && eps_list[k] < extent)) {
                throw DomainError("SolverConfig: eps values must lie in (0, R^n)");
            }
            if (k > 0 && !(eps_list[k] < eps_list[k - 1])) {
                throw DomainError("SolverConfig: eps_list must be strictly decreasing");
            }
        }
        if (max_gradient && !(*max_gradient > 0.0)) {
            throw DomainError("SolverConfig: max_gradient must be positive");
        }
    }

    [[nodiscard]] double gradient_threshold(const Params& p) const {
        return max_gradient.value_or(1e6 * p.w_max() / p.volume_extent());
    }
};

enum class Termination { ReachedEnd, GradientThreshold, StepFailure };

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::ReachedEnd: return "reached_t_end";
        case Termination::GradientThreshold: return "gradient_threshold";
        case Termination::StepFailure: return "step_failure";
    }
    return "unknown";
}

struct StepDiagnostics {
    std::size_t step = 0;
    double time = 0.0;
    double dt = 0.0;
    double max_slope = 0.0;
    double min_slope = 0.0;
    double min_value = 0.0;
    double max_value = 0.0;
    /// omega_n * w(R^n).
    double mass = 0.0;
    /// Largest scaled second difference (<= 0 means concave).
    double max_second_difference = 0.0;
    std::optional<double> moment;
};

struct EvolutionResult {
    double eps = 0.0;
    std::vector<WProfile> snapshots;
    /// Entry 0 describes the initial state; entry k the state after step k.
    std::vector<StepDiagnostics> diagnostics;
    Termination termination = Termination::ReachedEnd;
    double final_time = 0.0;
    std::string failure_message;
    double wall_seconds = 0.0;
};

namespace detail {

/// Thomas algorithm on rows lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i].
inline void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                              std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const double factor = lower[i] / diag[i - 1];
            diag[i] -= factor * upper[i - 1];
            rhs[i] -= factor * rhs[i - 1];
        }
        if (!(diag[i] > 0.0) || !std::isfinite(diag[i])) {
            throw StepFailure("tridiagonal solve: nonpositive pivot at row " + std::to_string(i));
        }
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

inline double advection_speed(const Params& p, double w, double s, double eps) {
    return p.n * w - p.mu * (s - eps);
}

inline void require_boundary_consistent(const WProfile& w, double eps, const Params& p, const char* who) {
    const double extent = p.volume_extent();
    if (std::abs(w.grid.lower() - eps) > 1e-12 * extent) {
        throw DomainError(std::string(who) + ": grid must start at s = eps");
    }
    if (std::abs(w.grid.upper() - extent) > 1e-12 * extent) {
        throw DomainError(std::string(who) + ": grid must end at s = R^n");
    }
    const double top = p.w_max();
    if (std::abs(w.values.front()) > 1e-12 * top || std::abs(w.values.back() - top) > 1e-12 * top) {
        throw DomainError(std::string(who) + ": profile violates the Dirichlet data");
    }
}

}  // namespace detail

/// Largest step allowed by the CFL policy for the current state (ignores dt_max).
inline double cfl_step(const WProfile& w, double eps, const Params& p, const SolverConfig& cfg) {
    const auto& g = w.grid;
    double rate = 0.0;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        const double hm = g.spacing(i - 1);
        const double hp = g.spacing(i);
        const double c = detail::advection_speed(p, w.values[i], g[i], eps);
        const double h_up = c > 0.0 ? hp : hm;
        double r = std::abs(c) / h_up;
        if (cfg.theta < 1.0) {
            r += (1.0 - cfg.theta) * p.diffusion_coefficient(g[i]) * 2.0 / (hm * hp);
        }
        rate = std::max(rate, r);
    }
    return rate > 0.0 ? cfg.cfl_safety / rate : std::numeric_limits<double>::infinity();
}

/// One step of size dt; throws StepFailure on a singular solve or non-finite result.
inline WProfile step_eps(const WProfile& w, double dt, double eps, const Params& p, const SolverConfig& cfg) {
    if (!(dt > 0.0)) {
        throw DomainError("step_eps: dt must be positive");
    }
    const auto& g = w.grid;
    const std::size_t n_nodes = w.size();
    const std::size_t n_inner = n_nodes - 2;
    const double top = p.w_max();
    const double theta = cfg.theta;

    std::vector<double> lower(n_inner), diag(n_inner), upper(n_inner), rhs(n_inner);
    for (std::size_t k = 0; k < n_inner; ++k) {
        const std::size_t i = k + 1;
        const double hm = g.spacing(i - 1);
        const double hp = g.spacing(i);
        const double lm = 2.0 / (hm * (hm + hp));
        const double lp = 2.0 / (hp * (hm + hp));
        const double d = p.diffusion_coefficient(g[i]);
        const double wi = w.values[i];

        const double c = detail::advection_speed(p, wi, g[i], eps);
        const double advection =
            c > 0.0 ? c * (w.values[i + 1] - wi) / hp : c * (wi - w.values[i - 1]) / hm;
        // Increment form: solve for w_new - w. Differences keep flat stretches exactly flat.
        const double laplacian = lp * (w.values[i + 1] - wi) - lm * (wi - w.values[i - 1]);
        lower[k] = -theta * dt * d * lm;
        upper[k] = -theta * dt * d * lp;
        diag[k] = 1.0 + theta * dt * d * (lm + lp);
        rhs[k] = dt * (advection + d * laplacian);
    }
    // Dirichlet data is fixed, so the increment vanishes at both ends.
    upper[n_inner - 1] = 0.0;
    lower[0] = 0.0;

    detail::solve_tridiagonal(lower, diag, upper, rhs);

    std::vector<double> next(n_nodes);
    next.front() = 0.0;
    next.back() = top;
    for (std::size_t k = 0; k < n_inner; ++k) {
        if (!std::isfinite(rhs[k])) {
            throw StepFailure("step_eps: non-finite value at node " + std::to_string(k + 1));
        }
        next[k + 1] = w.values[k + 1] + rhs[k];
    }
    return WProfile(g, std::move(next), w.time + dt);
}

inline StepDiagnostics diagnose(const WProfile& w, const Params& p, const SolverConfig& cfg,
                                std::size_t step, double dt) {
    StepDiagnostics d;
    d.step = step;
    d.time = w.time;
    d.dt = dt;
    d.max_slope = discrete::max_cell_slope(w.grid, w.values);
    d.min_slope = discrete::min_cell_slope(w.grid, w.values);
    const auto [lo, hi] = std::minmax_element(w.values.begin(), w.values.end());
    d.min_value = *lo;
    d.max_value = *hi;
    d.mass = p.omega_n * w.values.back();
    const double extent = p.volume_extent();
    d.max_second_difference =
        discrete::max_second_difference(w.grid, w.values, extent * extent / p.w_max()).worst;
    if (cfg.moment && w.grid.lower() == 0.0) {
        d.moment = moment(w, cfg.moment->gamma, cfg.moment->s1);
    }
    return d;
}

/**
 * Repeated step_eps until t_end, the gradient threshold, or a failed step.
 * Failures do not throw: they end the run with Termination::StepFailure.
 */
inline EvolutionResult evolve(const WProfile& w0, const Params& p, const SolverConfig& cfg, double eps) {
    cfg.validate(p);
    if (eps < 0.0) {
        throw DomainError("evolve: eps must be nonnegative");
    }
    detail::require_boundary_consistent(w0, eps, p, "evolve");
    const auto started = std::chrono::steady_clock::now();

    EvolutionResult result;
    result.eps = eps;
    WProfile current(w0.grid, w0.values, 0.0);
    result.snapshots.push_back(current);
    result.diagnostics.push_back(diagnose(current, p, cfg, 0, 0.0));

    const double threshold = cfg.gradient_threshold(p);
    const double t_end = cfg.t_end;
    const double t_tol = 1e-14 * std::max(1.0, t_end);
    std::size_t next_mark = 1;
    bool last_was_snapshot = true;

    for (std::size_t step = 1;; ++step) {
        if (current.time >= t_end - t_tol) {
            result.termination = Termination::ReachedEnd;
            break;
        }
        if (step > cfg.max_steps) {
            result.termination = Termination::StepFailure;
            result.failure_message = "step limit reached";
            break;
        }
        double dt = cfg.dt_policy == DtPolicy::Fixed ? cfg.dt : std::min(cfg.dt_max, cfl_step(current, eps, p, cfg));
        double target = current.time + dt;
        bool on_mark = false;
        if (cfg.snapshot_interval > 0.0) {
            const double mark = static_cast<double>(next_mark) * cfg.snapshot_interval;
            if (target >= mark - t_tol) {
                target = mark;
                on_mark = true;
            }
        }
        if (target >= t_end - t_tol) {
            target = t_end;
            on_mark = true;
        }
        dt = target - current.time;
        if (!(dt > std::numeric_limits<double>::min())) {
            result.termination = Termination::StepFailure;
            result.failure_message = "time step underflow";
            break;
        }
        try {
            WProfile next = step_eps(current, dt, eps, p, cfg);
            next.time = target;
            current = std::move(next);
        } catch (const StepFailure& e) {
            result.termination = Termination::StepFailure;
            result.failure_message = e.what();
            break;
        }
        if (on_mark && cfg.snapshot_interval > 0.0 && target < t_end) {
            ++next_mark;
        }
        const auto diag = diagnose(current, p, cfg, step, dt);
        result.diagnostics.push_back(diag);

        const bool blown_up = diag.max_slope > threshold;
        const bool take = cfg.snapshot_interval > 0.0 ? on_mark : (step % cfg.snapshot_stride == 0);
        last_was_snapshot = false;
        if (take || blown_up || current.time >= t_end - t_tol) {
            result.snapshots.push_back(current);
            last_was_snapshot = true;
        }
        if (blown_up) {
            result.termination = Termination::GradientThreshold;
            break;
        }
    }
    if (!last_was_snapshot) {
        result.snapshots.push_back(current);
    }
    result.final_time = current.time;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

struct FamilyIncrement {
    double eps_coarse = 0.0;
    double eps_fine = 0.0;
    /// sup over shared nodes in [R^n/10, R^n] and shared times of |w_fine - w_coarse|.
    double sup_increment = 0.0;
    /// Most negative w_fine - w_coarse over all shared nodes and times (>= 0 when ordered).
    double min_difference = 0.0;
};

struct LimitFamily {
    std::vector<EvolutionResult> members;
    /// Shared coordinates (nodes common to every member grid).
    std::vector<double> shared_nodes;
    /// Snapshot times common to every member.
    std::vector<double> shared_times;
    std::vector<FamilyIncrement> increments;
    /// Limit proxy: the smallest-eps member's snapshots restricted to the shared nodes.
    std::vector<std::vector<double>> limit_values;
    /// First shared time at which the limit proxy, extrapolated linearly to s = 0,
    /// departs from 0 by more than 1e-6 m/omega_n. Diagnostic only.
    std::optional<double> origin_departure_time;
    bool complete = true;
    std::string failure_report;
};

namespace detail {

inline std::vector<double> values_at(const WProfile& w, const std::vector<double>& nodes) {
    std::vector<double> out;
    out.reserve(nodes.size());
    const auto grid_nodes = w.grid.nodes();
    for (const double s : nodes) {
        const auto it = std::lower_bound(grid_nodes.begin(), grid_nodes.end(), s);
        out.push_back(w.values[static_cast<std::size_t>(it - grid_nodes.begin())]);
    }
    return out;
}

inline const WProfile* snapshot_at(const EvolutionResult& run, double t) {
    for (const auto& snap : run.snapshots) {
        if (snap.time == t) {
            return &snap;
        }
    }
    return nullptr;
}

}  // namespace detail

inline LimitFamily assemble_family(std::vector<EvolutionResult> members, const Params& p);

/**
 * Runs evolve from regularized_initial(w0, eps) for every eps in cfg.eps_list
 * and compares members on their shared nodes and snapshot times. Members run
 * independently; the parallel path produces bitwise the same members.
 */
inline LimitFamily limit_family(const WInitial& w0, const Params& p, const SolverConfig& cfg) {
    cfg.validate(p);
    if (cfg.eps_list.empty()) {
        throw DomainError("limit_family: eps_list is empty");
    }
    LimitFamily family;
    const auto run_member = [&](double eps) {
        return evolve(regularized_initial(w0, eps), p, cfg, eps);
    };
    if (cfg.parallel_family) {
        std::vector<std::future<EvolutionResult>> pending;
        for (const double eps : cfg.eps_list) {
            pending.push_back(std::async(std::launch::async, run_member, eps));
        }
        for (auto& f : pending) {
            family.members.push_back(f.get());
        }
    } else {
        for (const double eps : cfg.eps_list) {
            family.members.push_back(run_member(eps));
        }
    }
    return assemble_family(std::move(family.members), p);
}

/// Shared-node comparison of family members ordered by decreasing eps.
inline LimitFamily assemble_family(std::vector<EvolutionResult> members, const Params& p) {
    if (members.empty()) {
        throw DomainError("assemble_family: no members");
    }
    for (std::size_t k = 1; k < members.size(); ++k) {
        if (!(members[k].eps < members[k - 1].eps)) {
            throw DomainError("assemble_family: members must be ordered by decreasing eps");
        }
    }
    LimitFamily family;
    family.members = std::move(members);
    for (const auto& member : family.members) {
        if (member.termination == Termination::StepFailure) {
            family.complete = false;
            family.failure_report += "eps=" + std::to_string(member.eps) + " failed at t=" +
                                     std::to_string(member.final_time) + ": " + member.failure_message + "\n";
        }
    }

    // Shared nodes: those of the largest-eps member present in every other grid.
    const auto& coarse_nodes = family.members.front().snapshots.front().grid.nodes();
    for (const double s : coarse_nodes) {
        if (s <= family.members.front().eps) {
            continue;
        }
        bool everywhere = true;
        for (const auto& member : family.members) {
            const auto nodes = member.snapshots.front().grid.nodes();
            if (!std::binary_search(nodes.begin(), nodes.end(), s)) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) {
            family.shared_nodes.push_back(s);
        }
    }
    for (const auto& snap : family.members.front().snapshots) {
        bool everywhere = true;
        for (const auto& member : family.members) {
            if (detail::snapshot_at(member, snap.time) == nullptr) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) {
            family.shared_times.push_back(snap.time);
        }
    }

    const double extent = p.volume_extent();
    for (std::size_t k = 0; k + 1 < family.members.size(); ++k) {
        FamilyIncrement inc;
        inc.eps_coarse = family.members[k].eps;
        inc.eps_fine = family.members[k + 1].eps;
        inc.min_difference = std::numeric_limits<double>::infinity();
        for (const double t : family.shared_times) {
            const auto coarse = detail::values_at(*detail::snapshot_at(family.members[k], t), family.shared_nodes);
            const auto fine = detail::values_at(*detail::snapshot_at(family.members[k + 1], t), family.shared_nodes);
            for (std::size_t j = 0; j < family.shared_nodes.size(); ++j) {
                const double diff = fine[j] - coarse[j];
                inc.min_difference = std::min(inc.min_difference, diff);
                if (family.shared_nodes[j] >= 0.1 * extent) {
                    inc.sup_increment = std::max(inc.sup_increment, std::abs(diff));
                }
            }
        }
        family.increments.push_back(inc);
    }

    const auto& finest = family.members.back();
    for (const double t : family.shared_times) {
        family.limit_values.push_back(detail::values_at(*detail::snapshot_at(finest, t), family.shared_nodes));
    }
    if (family.shared_nodes.size() >= 2) {
        const double s_a = family.shared_nodes[0];
        const double s_b = family.shared_nodes[1];
        for (std::size_t k = 0; k < family.shared_times.size(); ++k) {
            const auto& v = family.limit_values[k];
            const double at_origin = v[0] - s_a * (v[1] - v[0]) / (s_b - s_a);
            if (at_origin > 1e-6 * p.w_max()) {
                family.origin_departure_time = family.shared_times[k];
                break;
            }
        }
    }
    return family;
}

}  // namespace degenchem
