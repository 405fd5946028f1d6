#pragma once

/**
 * @file config.hpp
 * @brief Flat INI run configuration.
 *
 *     params.n = 2          # or, inside a [params] section: n = 2
 *     solver.eps_list = 0.2, 0.1, 0.05
 *
 * Every key has a default; unknown keys are an error.
 */

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/io.hpp"
#include "degenchem/solver.hpp"

namespace degenchem {

/// Invalid or unknown configuration entry.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Generator { Concave, Concentrated, Linear, Csv };

inline const char* to_string(Generator g) {
    switch (g) {
        case Generator::Concave: return "concave";
        case Generator::Concentrated: return "concentrated";
        case Generator::Linear: return "linear";
        case Generator::Csv: return "csv";
    }
    return "unknown";
}

struct InitialConfig {
    Generator generator = Generator::Concave;
    double steepness = 1.0;
    ConcaveShape shape = ConcaveShape::Quartic;
    /// Concentrated data: mass inside s0 (default m) and s0 (default from thresholds).
    std::optional<double> m0;
    std::optional<double> s0;
    double ramp_fraction = 1.0 / 16.0;
    std::string path;
};

struct GridConfig {
    std::size_t nodes = 1024;
    GradingSpec grading{Grading::Uniform, 1.0, 1.0};
};

struct AnalysisConfig {
    std::optional<double> gamma;
    std::optional<double> m0;
};

struct OutputConfig {
    std::string dir = "run";
    bool gnuplot = false;
};

struct RunConfig {
    int n = 2;
    double R = 1.0;
    double beta = 1.0;
    double m = 6.283185307179586;
    InitialConfig initial;
    GridConfig grid;
    SolverConfig solver;
    AnalysisConfig analysis;
    OutputConfig output;

    [[nodiscard]] Params params() const { return make_params(n, R, beta, m); }
};

namespace detail {

inline double config_number(std::string_view key, std::string_view value) {
    const auto v = io::parse_double(value);
    if (!v) {
        throw ConfigError("config: " + std::string(key) + " expects a number, got '" + std::string(value) + "'");
    }
    return *v;
}

inline long long config_integer(std::string_view key, std::string_view value) {
    const auto v = io::parse_integer(value);
    if (!v) {
        throw ConfigError("config: " + std::string(key) + " expects an integer, got '" + std::string(value) + "'");
    }
    return *v;
}

inline std::size_t config_count(std::string_view key, std::string_view value) {
    const auto v = config_integer(key, value);
    if (v < 0) {
        throw ConfigError("config: " + std::string(key) + " must be nonnegative");
    }
    return static_cast<std::size_t>(v);
}

inline bool config_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError("config: " + std::string(key) + " expects true or false");
}

}  // namespace detail

/// Comma-separated floats ("0.2, 0.1,0.05").
inline std::vector<double> parse_number_list(std::string_view text, std::string_view key = "list") {
    std::vector<double> out;
    if (io::trim(text).empty()) {
        return out;
    }
    for (const auto item : io::split(text, ',')) {
        out.push_back(detail::config_number(key, item));
    }
    return out;
}

/// Applies one key=value pair; throws ConfigError for unknown keys or bad values.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    using namespace detail;
    using Setter = std::function<void(RunConfig&, const std::string&)>;
    static const std::map<std::string, Setter> setters = {
        {"params.n", [](RunConfig& c, const std::string& v) { c.n = static_cast<int>(config_integer("params.n", v)); }},
        {"params.R", [](RunConfig& c, const std::string& v) { c.R = config_number("params.R", v); }},
        {"params.beta", [](RunConfig& c, const std::string& v) { c.beta = config_number("params.beta", v); }},
        {"params.m", [](RunConfig& c, const std::string& v) { c.m = config_number("params.m", v); }},
        {"initial.generator",
         [](RunConfig& c, const std::string& v) {
             if (v == "concave") c.initial.generator = Generator::Concave;
             else if (v == "concentrated") c.initial.generator = Generator::Concentrated;
             else if (v == "linear") c.initial.generator = Generator::Linear;
             else if (v == "csv") c.initial.generator = Generator::Csv;
             else throw ConfigError("config: initial.generator must be concave|concentrated|linear|csv");
         }},
        {"initial.steepness",
         [](RunConfig& c, const std::string& v) { c.initial.steepness = config_number("initial.steepness", v); }},
        {"initial.shape",
         [](RunConfig& c, const std::string& v) {
             if (v == "quartic") c.initial.shape = ConcaveShape::Quartic;
             else if (v == "quadratic") c.initial.shape = ConcaveShape::Quadratic;
             else if (v == "quintic") c.initial.shape = ConcaveShape::QuinticSmoothstep;
             else throw ConfigError("config: initial.shape must be quartic|quadratic|quintic");
         }},
        {"initial.m0", [](RunConfig& c, const std::string& v) { c.initial.m0 = config_number("initial.m0", v); }},
        {"initial.s0", [](RunConfig& c, const std::string& v) { c.initial.s0 = config_number("initial.s0", v); }},
        {"initial.ramp_fraction",
         [](RunConfig& c, const std::string& v) { c.initial.ramp_fraction = config_number("initial.ramp_fraction", v); }},
        {"initial.path", [](RunConfig& c, const std::string& v) { c.initial.path = v; }},
        {"grid.n", [](RunConfig& c, const std::string& v) { c.grid.nodes = config_count("grid.n", v); }},
        {"grid.grading",
         [](RunConfig& c, const std::string& v) {
             if (v == "uniform") c.grid.grading = GradingSpec{Grading::Uniform, 1.0, 1.0};
             else if (v == "geometric") c.grid.grading = GradingSpec{};
             else throw ConfigError("config: grid.grading must be uniform|geometric");
         }},
        {"grid.ratio", [](RunConfig& c, const std::string& v) { c.grid.grading.ratio = config_number("grid.ratio", v); }},
        {"grid.refinement",
         [](RunConfig& c, const std::string& v) { c.grid.grading.refinement = config_number("grid.refinement", v); }},
        {"solver.theta", [](RunConfig& c, const std::string& v) { c.solver.theta = config_number("solver.theta", v); }},
        {"solver.dt_policy",
         [](RunConfig& c, const std::string& v) {
             if (v == "cfl") c.solver.dt_policy = DtPolicy::Cfl;
             else if (v == "fixed") c.solver.dt_policy = DtPolicy::Fixed;
             else throw ConfigError("config: solver.dt_policy must be cfl|fixed");
         }},
        {"solver.dt", [](RunConfig& c, const std::string& v) { c.solver.dt = config_number("solver.dt", v); }},
        {"solver.cfl_safety",
         [](RunConfig& c, const std::string& v) { c.solver.cfl_safety = config_number("solver.cfl_safety", v); }},
        {"solver.dt_max", [](RunConfig& c, const std::string& v) { c.solver.dt_max = config_number("solver.dt_max", v); }},
        {"solver.t_end", [](RunConfig& c, const std::string& v) { c.solver.t_end = config_number("solver.t_end", v); }},
        {"solver.eps_list",
         [](RunConfig& c, const std::string& v) { c.solver.eps_list = parse_number_list(v, "solver.eps_list"); }},
        {"solver.max_gradient",
         [](RunConfig& c, const std::string& v) { c.solver.max_gradient = config_number("solver.max_gradient", v); }},
        {"solver.snapshot_stride",
         [](RunConfig& c, const std::string& v) { c.solver.snapshot_stride = config_count("solver.snapshot_stride", v); }},
        {"solver.snapshot_interval",
         [](RunConfig& c, const std::string& v) {
             c.solver.snapshot_interval = config_number("solver.snapshot_interval", v);
         }},
        {"solver.max_steps",
         [](RunConfig& c, const std::string& v) { c.solver.max_steps = config_count("solver.max_steps", v); }},
        {"solver.parallel_family",
         [](RunConfig& c, const std::string& v) { c.solver.parallel_family = config_bool("solver.parallel_family", v); }},
        {"analysis.gamma", [](RunConfig& c, const std::string& v) { c.analysis.gamma = config_number("analysis.gamma", v); }},
        {"analysis.m0", [](RunConfig& c, const std::string& v) { c.analysis.m0 = config_number("analysis.m0", v); }},
        {"analysis.snapshot_stride",
         [](RunConfig& c, const std::string& v) {
             c.solver.snapshot_stride = config_count("analysis.snapshot_stride", v);
         }},
        {"output.dir", [](RunConfig& c, const std::string& v) { c.output.dir = v; }},
        {"output.formats",
         [](RunConfig& c, const std::string& v) {
             c.output.gnuplot = false;
             for (const auto item : io::split(v, ',')) {
                 const auto f = io::trim(item);
                 if (f == "gnuplot") c.output.gnuplot = true;
                 else if (f != "csv") throw ConfigError("config: output.formats accepts csv and gnuplot");
             }
         }},
    };
    const auto it = setters.find(key);
    if (it == setters.end()) {
        throw ConfigError("config: unknown key '" + key + "'");
    }
    it->second(cfg, value);
}

/// Parses INI text; `[section]` lines prefix the keys that follow.
inline RunConfig parse_config(const std::string& text, const std::string& file = "config") {
    RunConfig cfg;
    std::string section;
    std::size_t line_no = 0;
    for (const auto raw : io::split(text, '\n')) {
        ++line_no;
        auto line = io::trim(raw);
        const auto hash = line.find_first_of("#;");
        if (hash != std::string_view::npos) {
            line = io::trim(line.substr(0, hash));
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(file + ":" + std::to_string(line_no) + ": malformed section header");
            }
            section = std::string(io::trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(file + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key(io::trim(line.substr(0, eq)));
        if (!section.empty()) {
            key = section + "." + key;
        }
        try {
            apply_setting(cfg, key, std::string(io::trim(line.substr(eq + 1))));
        } catch (const ConfigError& e) {
            throw ConfigError(file + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

inline RunConfig load_config(const std::filesystem::path& path) {
    return parse_config(io::read_file(path), path.string());
}

/// Canonical key=value form; parse_config(format_config(c)) reproduces c.
inline std::string format_config(const RunConfig& c) {
    using io::format_double;
    std::string out;
    const auto put = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    put("params.n", std::to_string(c.n));
    put("params.R", format_double(c.R));
    put("params.beta", format_double(c.beta));
    put("params.m", format_double(c.m));
    put("initial.generator", to_string(c.initial.generator));
    put("initial.steepness", format_double(c.initial.steepness));
    put("initial.shape", c.initial.shape == ConcaveShape::Quartic     ? "quartic"
                         : c.initial.shape == ConcaveShape::Quadratic ? "quadratic"
                                                                      : "quintic");
    if (c.initial.m0) put("initial.m0", format_double(*c.initial.m0));
    if (c.initial.s0) put("initial.s0", format_double(*c.initial.s0));
    put("initial.ramp_fraction", format_double(c.initial.ramp_fraction));
    if (!c.initial.path.empty()) put("initial.path", c.initial.path);
    put("grid.n", std::to_string(c.grid.nodes));
    put("grid.grading", c.grid.grading.kind == Grading::Uniform ? "uniform" : "geometric");
    if (c.grid.grading.kind == Grading::Geometric) {
        put("grid.ratio", format_double(c.grid.grading.ratio));
        put("grid.refinement", format_double(c.grid.grading.refinement));
    }
    put("solver.theta", format_double(c.solver.theta));
    put("solver.dt_policy", c.solver.dt_policy == DtPolicy::Cfl ? "cfl" : "fixed");
    put("solver.dt", format_double(c.solver.dt));
    put("solver.cfl_safety", format_double(c.solver.cfl_safety));
    put("solver.dt_max", format_double(c.solver.dt_max));
    put("solver.t_end", format_double(c.solver.t_end));
    if (!c.solver.eps_list.empty()) {
        std::string list;
        for (const double e : c.solver.eps_list) {
            list += (list.empty() ? "" : ", ") + format_double(e);
        }
        put("solver.eps_list", list);
    }
    if (c.solver.max_gradient) put("solver.max_gradient", format_double(*c.solver.max_gradient));
    put("solver.snapshot_stride", std::to_string(c.solver.snapshot_stride));
    put("solver.snapshot_interval", format_double(c.solver.snapshot_interval));
    put("solver.max_steps", std::to_string(c.solver.max_steps));
    put("solver.parallel_family", c.solver.parallel_family ? "true" : "false");
    if (c.analysis.gamma) put("analysis.gamma", format_double(*c.analysis.gamma));
    if (c.analysis.m0) put("analysis.m0", format_double(*c.analysis.m0));
    put("output.dir", c.output.dir);
    put("output.formats", c.output.gnuplot ? "csv, gnuplot" : "csv");
    return out;
}

}  // namespace degenchem
