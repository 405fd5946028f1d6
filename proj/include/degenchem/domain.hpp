#pragma once

/**
 * @file domain.hpp
 * @brief Problem parameters and volume-coordinate grids for the radial
 *        degenerate Keller-Segel problem on the ball B_R(0) in R^n.
 *
 * Everything downstream works in the volume variable s = r^n on [0, R^n].
 * Params carries the geometric constants; SGrid is an immutable node set
 * shared cheaply between profiles.
 */

#include <cmath>
#include <cstddef>
#include <memory>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace degenchem {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Surface measure of the unit sphere in R^n: 2 pi^(n/2) / Gamma(n/2).
inline double unit_sphere_area(int n) {
    if (n <= 0) {
        throw DomainError("unit_sphere_area: dimension must be >= 1, got " + std::to_string(n));
    }
    const double half = 0.5 * n;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

struct Params {
    int n = 2;
    double R = 1.0;
    double beta = 1.0;
    double m = 1.0;
    double omega_n = 2.0 * std::numbers::pi;
    double mu = 1.0 / std::numbers::pi;

    /// R^n, the right end of the volume interval.
    [[nodiscard]] double volume_extent() const { return std::pow(R, n); }
    /// m / omega_n, the Dirichlet value of w at s = R^n.
    [[nodiscard]] double w_max() const { return m / omega_n; }
    /// Exponent of the degenerate diffusion coefficient s^(2 - 2/n + beta/n).
    [[nodiscard]] double diffusion_exponent() const { return 2.0 - 2.0 / n + beta / n; }
    /// n^2 s^(2 - 2/n + beta/n).
    [[nodiscard]] double diffusion_coefficient(double s) const {
        return static_cast<double>(n) * n * std::pow(s, diffusion_exponent());
    }
};

inline Params make_params(int n, double R, double beta, double m) {
    if (n < 1) {
        throw DomainError("make_params: n must be >= 1");
    }
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw DomainError("make_params: R must be positive");
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw DomainError("make_params: beta must be positive");
    }
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw DomainError("make_params: total mass m must be positive");
    }
    Params p;
    p.n = n;
    p.R = R;
    p.beta = beta;
    p.m = m;
    p.omega_n = unit_sphere_area(n);
    p.mu = n * m / (p.omega_n * std::pow(R, n));
    return p;
}

enum class Grading { Uniform, Geometric };

struct GradingSpec {
    Grading kind = Grading::Geometric;
    /// Ratio between neighbouring cells inside the refined zone.
    double ratio = 1.05;
    /// Target ratio between the coarsest and finest cell.
    double refinement = 1.0e6;
};

/**
 * Strictly increasing node set on [lower, upper] in the volume variable.
 *
 * Nodes are stored behind a shared pointer to const, so copying a grid (and
 * therefore a profile) never copies coordinates.
 */
class SGrid {
public:
    static constexpr double kDefaultSpacingRatioBound = 10.0;

    SGrid(std::vector<double> nodes, GradingSpec grading,
          double spacing_ratio_bound = kDefaultSpacingRatioBound)
        : grading_(grading) {
        if (nodes.size() < 3) {
            throw DomainError("SGrid: at least 3 nodes required");
        }
        if (!(nodes.front() >= 0.0)) {
            throw DomainError("SGrid: nodes must be nonnegative");
        }
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            if (!(nodes[i] > nodes[i - 1]) || !std::isfinite(nodes[i])) {
                throw DomainError("SGrid: nodes must be finite and strictly increasing (index " +
                                  std::to_string(i) + ")");
            }
        }
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
            const double a = nodes[i] - nodes[i - 1];
            const double b = nodes[i + 1] - nodes[i];
            const double ratio = a > b ? a / b : b / a;
            if (ratio > spacing_ratio_bound) {
                throw DomainError("SGrid: adjacent spacing ratio " + std::to_string(ratio) +
                                  " exceeds bound at node " + std::to_string(i));
            }
        }
        nodes_ = std::make_shared<const std::vector<double>>(std::move(nodes));
    }

    [[nodiscard]] std::span<const double> nodes() const { return *nodes_; }
    [[nodiscard]] std::size_t size() const { return nodes_->size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return (*nodes_)[i]; }
    [[nodiscard]] double lower() const { return nodes_->front(); }
    [[nodiscard]] double upper() const { return nodes_->back(); }
    [[nodiscard]] double spacing(std::size_t cell) const {
        return (*nodes_)[cell + 1] - (*nodes_)[cell];
    }
    [[nodiscard]] const GradingSpec& grading() const { return grading_; }

    [[nodiscard]] bool same_nodes(const SGrid& other) const {
        return nodes_ == other.nodes_ || *nodes_ == *other.nodes_;
    }

private:
    std::shared_ptr<const std::vector<double>> nodes_;
    GradingSpec grading_;
};

inline SGrid make_uniform_grid(double lower, double upper, std::size_t n_nodes) {
    if (n_nodes < 3) {
        throw DomainError("make_uniform_grid: at least 3 nodes required");
    }
    if (!(upper > lower) || lower < 0.0) {
        throw DomainError("make_uniform_grid: need 0 <= lower < upper");
    }
    std::vector<double> nodes(n_nodes);
    const double h = (upper - lower) / static_cast<double>(n_nodes - 1);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        nodes[i] = lower + h * static_cast<double>(i);
    }
    nodes.back() = upper;
    return SGrid(std::move(nodes), GradingSpec{Grading::Uniform, 1.0, 1.0});
}

/**
 * Geometrically refined toward `lower`: the first K cells grow by `ratio`
 * until they reach the uniform spacing used for the rest of the interval.
 * K is chosen so the coarse/fine ratio is about `refinement`, but never more
 * than half the cells.
 */
inline SGrid make_graded_grid(double lower, double upper, std::size_t n_nodes, double ratio = 1.05,
                              double refinement = 1.0e6) {
    if (n_nodes < 3) {
        throw DomainError("make_graded_grid: at least 3 nodes required");
    }
    if (!(upper > lower) || lower < 0.0) {
        throw DomainError("make_graded_grid: need 0 <= lower < upper");
    }
    if (!(ratio > 1.0) || !(refinement >= 1.0)) {
        throw DomainError("make_graded_grid: ratio must exceed 1 and refinement must be >= 1");
    }
    const std::size_t cells = n_nodes - 1;
    const auto wanted = static_cast<std::size_t>(std::ceil(std::log(refinement) / std::log(ratio)));
    const std::size_t graded = std::min(wanted, cells / 2);

    // h_j = h_max * ratio^(j - graded) for j < graded, h_max afterwards.
    double unit_length = static_cast<double>(cells - graded);
    for (std::size_t j = 0; j < graded; ++j) {
        unit_length += std::pow(ratio, static_cast<double>(j) - static_cast<double>(graded));
    }
    const double h_max = (upper - lower) / unit_length;

    std::vector<double> nodes(n_nodes);
    nodes[0] = lower;
    for (std::size_t j = 0; j < cells; ++j) {
        const double h = j < graded
                             ? h_max * std::pow(ratio, static_cast<double>(j) - static_cast<double>(graded))
                             : h_max;
        nodes[j + 1] = nodes[j] + h;
    }
    nodes.back() = upper;
    return SGrid(std::move(nodes), GradingSpec{Grading::Geometric, ratio, refinement});
}

/// Grid on [0, R^n] with the requested grading.
inline SGrid make_grid(const Params& p, std::size_t n_nodes, const GradingSpec& grading = {}) {
    if (grading.kind == Grading::Uniform) {
        return make_uniform_grid(0.0, p.volume_extent(), n_nodes);
    }
    return make_graded_grid(0.0, p.volume_extent(), n_nodes, grading.ratio, grading.refinement);
}

}  // namespace degenchem
