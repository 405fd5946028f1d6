#pragma once

/**
 * @file cli.hpp
 * @brief Batch commands behind the degenchem executable.
 *
 * Run directory layout:
 *
 *     manifest.txt          key=value: params, solver settings, termination
 *     config.ini            effective configuration
 *     w0.csv                initial profile
 *     diagnostics.csv       one row per accepted step
 *     snapshots/index.csv   index,t,file
 *     snapshots/NNNNN.csv   w-profiles
 *     moment_series.csv     written by certify
 *     plot.gp               when output.formats includes gnuplot
 *
 * Exit codes
 *     run/sweep   0 reached t_end, 10 gradient threshold, 11 step failure
 *     certify     0 certified, 2 hypotheses-not-met, 3 inconclusive
 *     verify      0 all properties pass, 1 otherwise
 *     any         64 usage/config error, 65 malformed data, 66 I/O error
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "degenchem/analysis.hpp"
#include "degenchem/config.hpp"
#include "degenchem/domain.hpp"
#include "degenchem/initial_data.hpp"
#include "degenchem/io.hpp"
#include "degenchem/solver.hpp"
#include "degenchem/transform.hpp"

namespace degenchem::cli {

namespace fs = std::filesystem;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kHypothesesNotMet = 2,
    kInconclusive = 3,
    kGradientThreshold = 10,
    kStepFailure = 11,
    kUsage = 64,
    kDataError = 65,
    kIoError = 66,
};

inline int exit_code(Termination t) {
    switch (t) {
        case Termination::ReachedEnd: return kOk;
        case Termination::GradientThreshold: return kGradientThreshold;
        case Termination::StepFailure: return kStepFailure;
    }
    return kStepFailure;
}

inline int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Certified: return kOk;
        case Verdict::HypothesesNotMet: return kHypothesesNotMet;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

/// Maps exceptions from a command body onto exit codes.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

// ---------------------------------------------------------------------------
// Initial data from a configuration

inline MomentConfig analysis_moment_config(const RunConfig& cfg, const Params& p) {
    const double m0 = cfg.analysis.m0.value_or(cfg.initial.m0.value_or(p.m));
    return make_moment_config(p, m0, cfg.analysis.gamma);
}

inline WInitial build_initial(const RunConfig& cfg, const Params& p, const fs::path& base_dir = {}) {
    if (cfg.initial.generator == Generator::Csv) {
        if (cfg.initial.path.empty()) {
            throw ConfigError("config: initial.generator = csv needs initial.path");
        }
        fs::path path = cfg.initial.path;
        if (path.is_relative() && !base_dir.empty()) {
            path = base_dir / path;
        }
        const auto loaded = io::read_w_profile(path);
        if (loaded.params.n != p.n || loaded.params.R != p.R || loaded.params.beta != p.beta ||
            loaded.params.m != p.m) {
            throw ConfigError("config: parameters in " + path.string() + " differ from params.*");
        }
        return import_profile(loaded.profile, p);
    }
    const SGrid grid = make_grid(p, cfg.grid.nodes, cfg.grid.grading);
    switch (cfg.initial.generator) {
        case Generator::Concave: return make_concave_compatible(p, cfg.initial.steepness, grid, cfg.initial.shape);
        case Generator::Linear: return make_linear(p, grid);
        case Generator::Concentrated: {
            const auto moment = analysis_moment_config(cfg, p);
            const double m0 = cfg.initial.m0.value_or(moment.m0);
            const double s0 = cfg.initial.s0.value_or(moment.s0);
            return make_concentrated(p, m0, s0, grid, cfg.initial.ramp_fraction);
        }
        case Generator::Csv: break;
    }
    throw ConfigError("config: unsupported generator");
}

// ---------------------------------------------------------------------------
// Run directories

inline std::string snapshot_name(std::size_t k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%05zu.csv", k);
    return buf;
}

inline std::string format_diagnostics(const EvolutionResult& run) {
    using io::format_double;
    std::string out = "step,t,dt,min_w,max_w,min_slope,max_slope,mass,max_second_difference\n";
    for (const auto& d : run.diagnostics) {
        out += std::to_string(d.step) + "," + format_double(d.time) + "," + format_double(d.dt) + "," +
               format_double(d.min_value) + "," + format_double(d.max_value) + "," + format_double(d.min_slope) +
               "," + format_double(d.max_slope) + "," + format_double(d.mass) + "," +
               format_double(d.max_second_difference) + "\n";
    }
    return out;
}

inline std::string gnuplot_script(const EvolutionResult& run) {
    std::string out = "set datafile separator ','\nset xlabel 's'\nset ylabel 'w'\nplot \\\n";
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        out += "  'snapshots/" + snapshot_name(k) + "' using 1:2 with lines title 't=" +
               io::format_double(run.snapshots[k].time) + "'" + (k + 1 < run.snapshots.size() ? ", \\\n" : "\n");
    }
    out += "pause -1\nset xlabel 't'\nset ylabel 'max w_s'\nset logscale y\n"
           "plot 'diagnostics.csv' every ::1 using 2:7 with lines title 'max slope'\npause -1\n";
    return out;
}

inline io::Manifest run_manifest(const RunConfig& cfg, const Params& p, const WInitial& w0,
                                 const EvolutionResult& run) {
    io::Manifest m;
    m.set("format", "degenchem-run v1");
    m.set("params.n", p.n);
    m.set("params.R", p.R);
    m.set("params.beta", p.beta);
    m.set("params.m", p.m);
    m.set("params.omega_n", p.omega_n);
    m.set("params.mu", p.mu);
    m.set("eps", run.eps);
    m.set("initial.generator", w0.tag.generator);
    m.set("initial.smoothness", to_string(w0.tag.smoothness));
    m.set("initial.flag.boundary_and_monotone", w0.flags.boundary_and_monotone);
    m.set("initial.flag.concave", w0.flags.concave);
    m.set("initial.flag.compatible", w0.flags.compatible);
    m.set("initial.flag.concentrated", w0.flags.concentrated);
    m.set("grid.n", run.snapshots.front().size());
    const auto& s = cfg.solver;
    m.set("solver.theta", s.theta);
    m.set("solver.dt_policy", s.dt_policy == DtPolicy::Cfl ? "cfl" : "fixed");
    m.set("solver.dt", s.dt);
    m.set("solver.cfl_safety", s.cfl_safety);
    m.set("solver.dt_max", s.dt_max);
    m.set("solver.t_end", s.t_end);
    m.set("solver.max_gradient", s.gradient_threshold(p));
    m.set("solver.snapshot_stride", s.snapshot_stride);
    m.set("solver.snapshot_interval", s.snapshot_interval);
    m.set("solver.max_steps", s.max_steps);
    m.set("termination", to_string(run.termination));
    m.set("final_time", run.final_time);
    m.set("steps", run.diagnostics.size() - 1);
    m.set("snapshot_count", run.snapshots.size());
    if (!run.failure_message.empty()) {
        m.set("failure_message", run.failure_message);
    }
    m.set("timing.wall_seconds", run.wall_seconds);
    return m;
}

inline void write_run_directory(const fs::path& dir, const RunConfig& cfg, const Params& p, const WInitial& w0,
                                const EvolutionResult& run) {
    fs::create_directories(dir / "snapshots");
    for (const auto& entry : fs::directory_iterator(dir / "snapshots")) {
        fs::remove(entry.path());
    }
    io::write_file(dir / "config.ini", format_config(cfg));
    io::write_w_profile(dir / "w0.csv", w0.profile, p);
    io::write_file(dir / "diagnostics.csv", format_diagnostics(run));
    std::string index = "index,t,file\n";
    for (std::size_t k = 0; k < run.snapshots.size(); ++k) {
        io::write_w_profile(dir / "snapshots" / snapshot_name(k), run.snapshots[k], p);
        index += std::to_string(k) + "," + io::format_double(run.snapshots[k].time) + "," + snapshot_name(k) + "\n";
    }
    io::write_file(dir / "snapshots" / "index.csv", index);
    if (cfg.output.gnuplot) {
        io::write_file(dir / "plot.gp", gnuplot_script(run));
    }
    io::write_file(dir / "manifest.txt", run_manifest(cfg, p, w0, run).str());
}

struct LoadedRun {
    io::Manifest manifest;
    RunConfig config;
    Params params;
    WInitial w0;
    EvolutionResult run;
};

inline Termination parse_termination(const std::string& s) {
    if (s == "reached_t_end") return Termination::ReachedEnd;
    if (s == "gradient_threshold") return Termination::GradientThreshold;
    if (s == "step_failure") return Termination::StepFailure;
    throw io::IoError("manifest: unknown termination '" + s + "'");
}

inline LoadedRun load_run(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw io::IoError("not a run directory: " + dir.string());
    }
    auto manifest = io::Manifest::parse(io::read_file(dir / "manifest.txt"), (dir / "manifest.txt").string());
    auto config = load_config(dir / "config.ini");
    const Params p = config.params();
    const auto w0_file = io::read_w_profile(dir / "w0.csv");
    LoadedRun out{std::move(manifest), std::move(config), p, import_profile(w0_file.profile, p), EvolutionResult{}};
    out.run.eps = out.manifest.require_number("eps");
    out.run.termination = parse_termination(out.manifest.require("termination"));
    out.run.final_time = out.manifest.require_number("final_time");
    if (auto msg = out.manifest.get("failure_message")) {
        out.run.failure_message = *msg;
    }

    const auto index_path = dir / "snapshots" / "index.csv";
    const auto index_text = io::read_file(index_path);
    std::size_t line_no = 0;
    for (const auto raw : io::split(index_text, '\n')) {
        ++line_no;
        const auto line = io::trim(raw);
        if (line_no == 1 || line.empty()) {
            continue;
        }
        const auto cols = io::split(line, ',');
        const auto t = cols.size() == 3 ? io::parse_double(cols[1]) : std::nullopt;
        if (!t) {
            throw io::ParseError(index_path.string(), line_no, "expected index,t,file");
        }
        const auto file = dir / "snapshots" / std::string(io::trim(cols[2]));
        if (!fs::exists(file)) {
            throw io::IoError("missing snapshot " + file.string());
        }
        auto snap = io::read_w_profile(file, *t);
        out.run.snapshots.push_back(std::move(snap.profile));
    }
    if (out.run.snapshots.empty()) {
        throw io::IoError("run directory has no snapshots: " + dir.string());
    }
    const std::size_t expected = static_cast<std::size_t>(out.manifest.require_number("snapshot_count"));
    if (expected != out.run.snapshots.size()) {
        throw io::IoError("snapshot index lists " + std::to_string(out.run.snapshots.size()) + " files, manifest " +
                          std::to_string(expected));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commands

struct Overrides {
    std::optional<fs::path> out;
    std::optional<std::vector<double>> eps_list;
    std::optional<std::size_t> grid_n;
};

inline void apply_overrides(RunConfig& cfg, const Overrides& o) {
    if (o.out) cfg.output.dir = o.out->string();
    if (o.eps_list) cfg.solver.eps_list = *o.eps_list;
    if (o.grid_n) cfg.grid.nodes = *o.grid_n;
}

inline std::string summary_line(const EvolutionResult& run) {
    return "eps=" + io::format_double(run.eps) + " termination=" + to_string(run.termination) +
           " t=" + io::format_double(run.final_time) + " steps=" + std::to_string(run.diagnostics.size() - 1) +
           " snapshots=" + std::to_string(run.snapshots.size());
}

inline std::string format_family(const LimitFamily& family) {
    std::string out = "eps_coarse,eps_fine,sup_increment,min_difference\n";
    for (const auto& inc : family.increments) {
        out += io::format_double(inc.eps_coarse) + "," + io::format_double(inc.eps_fine) + "," +
               io::format_double(inc.sup_increment) + "," + io::format_double(inc.min_difference) + "\n";
    }
    return out;
}

/// eps-family into dir/eps_K; returns the worst member exit code.
inline int run_family(const RunConfig& cfg, const Params& p, const WInitial& w0, std::ostream& out) {
    const auto family = limit_family(w0, p, cfg.solver);
    const fs::path dir = cfg.output.dir;
    fs::create_directories(dir);
    int code = kOk;
    for (std::size_t k = 0; k < family.members.size(); ++k) {
        const auto& member = family.members[k];
        WInitial member_w0{member.snapshots.front(), w0.tag, w0.flags};
        write_run_directory(dir / ("eps_" + std::to_string(k)), cfg, p, member_w0, member);
        out << summary_line(member) << "\n";
        code = std::max(code, exit_code(member.termination));
    }
    io::write_file(dir / "family.csv", format_family(family));
    io::Manifest m;
    m.set("format", "degenchem-family v1");
    m.set("members", family.members.size());
    m.set("shared_nodes", family.shared_nodes.size());
    m.set("shared_times", family.shared_times.size());
    m.set("origin_departure_time",
          family.origin_departure_time ? io::format_double(*family.origin_departure_time) : std::string("none"));
    io::write_file(dir / "family.txt", m.str());
    io::write_file(dir / "config.ini", format_config(cfg));
    return code;
}

inline int cmd_run(RunConfig cfg, const Overrides& o, std::ostream& out, std::ostream& err,
                   const fs::path& config_dir = {}) {
    return guarded(err, [&] {
        apply_overrides(cfg, o);
        const Params p = cfg.params();
        cfg.solver.validate(p);
        const auto w0 = build_initial(cfg, p, config_dir);
        if (!cfg.solver.eps_list.empty()) {
            return run_family(cfg, p, w0, out);
        }
        const auto run = evolve(w0.profile, p, cfg.solver, 0.0);
        write_run_directory(cfg.output.dir, cfg, p, w0, run);
        out << summary_line(run) << "\n";
        return exit_code(run.termination);
    });
}

inline int cmd_sweep(RunConfig cfg, const Overrides& o, std::ostream& out, std::ostream& err,
                     const fs::path& config_dir = {}) {
    return guarded(err, [&] {
        apply_overrides(cfg, o);
        if (cfg.solver.eps_list.empty()) {
            throw ConfigError("sweep: solver.eps_list (or --eps-list) is required");
        }
        const Params p = cfg.params();
        cfg.solver.validate(p);
        return run_family(cfg, p, build_initial(cfg, p, config_dir), out);
    });
}

inline std::string format_moment_series(const BlowupCertificate& cert) {
    std::string out = "t,y,lower_ode_y\n";
    for (std::size_t k = 0; k < cert.moment_series.size(); ++k) {
        out += io::format_double(cert.moment_series[k].first) + "," +
               io::format_double(cert.moment_series[k].second) + "," + io::format_double(cert.lower_series[k]) + "\n";
    }
    return out;
}

inline void add_certificate(io::Manifest& m, const BlowupCertificate& cert, double wall_seconds) {
    m.erase_prefix("certificate.");
    m.set("certificate.verdict", to_string(cert.verdict));
    m.set("certificate.first_failure", cert.first_failure.empty() ? std::string("none") : cert.first_failure);
    m.set("certificate.gamma", cert.config.gamma);
    m.set("certificate.s0", cert.config.s0);
    m.set("certificate.s1", cert.config.s1);
    m.set("certificate.r0", std::pow(cert.config.s0, 1.0 / std::stod(m.require("params.n"))));
    m.set("certificate.c1", cert.config.c1);
    m.set("certificate.c2", cert.config.c2);
    m.set("certificate.c3", cert.config.c3);
    m.set("certificate.m0", cert.config.m0);
    m.set("certificate.y0", cert.y0);
    m.set("certificate.required_y0", cert.required_y0);
    m.set("certificate.ratio", cert.ratio);
    m.set("certificate.lower_ode_T",
          cert.lower_ode_blowup_time ? io::format_double(*cert.lower_ode_blowup_time) : std::string("none"));
    m.set("certificate.lower_ode_T_integrated",
          cert.lower_ode_blowup_time_integrated ? io::format_double(*cert.lower_ode_blowup_time_integrated)
                                                : std::string("none"));
    m.set("certificate.termination", to_string(cert.termination));
    m.set("certificate.termination_time", cert.termination_time);
    m.set("certificate.timing_ratio",
          cert.timing_ratio ? io::format_double(*cert.timing_ratio) : std::string("none"));
    m.set("certificate.timing_tolerance", 1.1);
    for (const auto& c : cert.checks) {
        m.set("certificate.check." + c.name, std::string(c.passed ? "pass " : "fail ") + io::format_double(c.value));
    }
    m.set("certificate.timing.wall_seconds", wall_seconds);
}

inline int cmd_certify(const fs::path& dir, const AnalysisConfig& analysis, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto started = std::chrono::steady_clock::now();
        auto loaded = load_run(dir);
        RunConfig cfg = loaded.config;
        if (analysis.gamma) cfg.analysis.gamma = analysis.gamma;
        if (analysis.m0) cfg.analysis.m0 = analysis.m0;
        const auto moment = analysis_moment_config(cfg, loaded.params);
        const auto cert = certify_blowup(loaded.run, loaded.w0, moment, loaded.params);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        add_certificate(loaded.manifest, cert, wall);
        io::write_file(dir / "manifest.txt", loaded.manifest.str());
        io::write_file(dir / "moment_series.csv", format_moment_series(cert));
        out << "verdict=" << to_string(cert.verdict);
        if (!cert.first_failure.empty()) {
            out << " first_failure=" << cert.first_failure;
        }
        out << " y0=" << io::format_double(cert.y0) << " ratio=" << io::format_double(cert.ratio);
        if (cert.lower_ode_blowup_time) {
            out << " T=" << io::format_double(*cert.lower_ode_blowup_time);
        }
        out << "\n";
        return exit_code(cert.verdict);
    });
}

struct PropertyLine {
    std::string name;
    bool passed = true;
    double worst = 0.0;
    std::string note;
};

/// Tolerances used by verify.
struct VerifyTolerances {
    double mass = 1e-8;
    double range = 1e-10;
    double slope = 1e-10;
    double concavity = 1e-9;
    double supersolution = 1e-8;
    double family_order = 1e-8;
};

inline std::vector<PropertyLine> verify_run(const LoadedRun& r, const VerifyTolerances& tol = {}) {
    std::vector<PropertyLine> lines;
    const Params& p = r.params;
    const double top = p.w_max();

    PropertyLine mass{"mass", true, 0.0, "max relative error of retransformed mass"};
    PropertyLine pinned{"boundary_mass", true, 0.0, "max relative error of omega_n w(R^n)"};
    PropertyLine range{"range", true, 0.0, "max excursion outside [0, m/omega_n]"};
    double min_w = 0.0;
    double excess = 0.0;
    PropertyLine mono{"monotonicity", true, 0.0, "most negative cell slope"};
    for (const auto& snap : r.run.snapshots) {
        mass.worst = std::max(mass.worst, std::abs(retransformed_mass(snap, p) - p.m) / p.m);
        pinned.worst = std::max(pinned.worst, std::abs(total_mass(snap, p) - p.m) / p.m);
        for (const double w : snap.values) {
            min_w = std::min(min_w, w);
            excess = std::max(excess, w - top);
        }
        mono.worst = std::min(mono.worst, discrete::min_cell_slope(snap.grid, snap.values));
    }
    mass.passed = mass.worst <= tol.mass;
    pinned.passed = pinned.worst <= 1e-14;
    // w >= 0 exactly, w <= m/omega_n up to tol.range.
    range.worst = std::max(0.0 - min_w, excess);
    range.passed = min_w >= 0.0 && excess <= tol.range;
    mono.passed = mono.worst >= -tol.slope;
    lines.insert(lines.end(), {mass, pinned, range, mono});

    const auto w0_concavity = check_concavity(r.w0.profile).worst;
    if (w0_concavity <= tol.concavity) {
        PropertyLine conc{"concavity", true, -std::numeric_limits<double>::infinity(),
                          "max scaled second difference"};
        for (const auto& snap : r.run.snapshots) {
            conc.worst = std::max(conc.worst, check_concavity(snap).worst);
        }
        conc.passed = conc.worst <= tol.concavity;
        lines.push_back(conc);
    } else {
        lines.push_back({"concavity", true, w0_concavity, "skipped: w0 not concave"});
    }

    if (r.run.eps == 0.0 && r.w0.flags.concave && r.w0.flags.compatible) {
        const double y0 = initial_slope_bound(r.w0.profile);
        const auto rep = check_supersolution(r.run, y0, p, tol.supersolution);
        lines.push_back({"supersolution", rep.passed, rep.worst_margin,
                         "min of y(t) s - w over snapshots with t < 0.95 T*"});
    } else {
        lines.push_back({"supersolution", true, 0.0, "skipped: needs eps = 0 and concave compatible w0"});
    }
    return lines;
}

inline std::vector<PropertyLine> verify_family(const fs::path& dir, const VerifyTolerances& tol = {}) {
    std::vector<EvolutionResult> members;
    std::optional<Params> p;
    for (std::size_t k = 0;; ++k) {
        const auto sub = dir / ("eps_" + std::to_string(k));
        if (!fs::is_directory(sub)) {
            break;
        }
        auto loaded = load_run(sub);
        p = loaded.params;
        members.push_back(std::move(loaded.run));
    }
    if (members.empty()) {
        throw io::IoError("family directory has no eps_K members: " + dir.string());
    }
    const auto family = assemble_family(std::move(members), *p);
    PropertyLine order{"eps_monotone", true, std::numeric_limits<double>::infinity(),
                       "min over shared nodes and times of w_fine - w_coarse"};
    PropertyLine increments{"eps_increments_decrease", true, 0.0, "max ratio of successive sup increments"};
    for (std::size_t k = 0; k < family.increments.size(); ++k) {
        order.worst = std::min(order.worst, family.increments[k].min_difference);
        if (k > 0) {
            const double ratio = family.increments[k].sup_increment / family.increments[k - 1].sup_increment;
            increments.worst = std::max(increments.worst, ratio);
        }
    }
    order.passed = order.worst >= -tol.family_order;
    increments.passed = increments.worst < 1.0;
    return {order, increments};
}

inline int cmd_verify(const fs::path& dir, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<PropertyLine> lines;
        if (fs::exists(dir / "family.csv")) {
            lines = verify_family(dir);
            for (std::size_t k = 0;; ++k) {
                const auto sub = dir / ("eps_" + std::to_string(k));
                if (!fs::is_directory(sub)) {
                    break;
                }
                for (auto line : verify_run(load_run(sub))) {
                    line.name = "eps_" + std::to_string(k) + "." + line.name;
                    lines.push_back(std::move(line));
                }
            }
        } else {
            lines = verify_run(load_run(dir));
        }
        bool all = true;
        for (const auto& line : lines) {
            all = all && line.passed;
            out << (line.passed ? "PASS " : "FAIL ") << line.name << " worst=" << io::format_double(line.worst)
                << " (" << line.note << ")\n";
        }
        return all ? kOk : kVerifyFailed;
    });
}

/// u-profile CSV -> w.csv, vr.csv, v.csv in out_dir; prints a summary line.
inline int cmd_transform(const fs::path& input, const fs::path& out_dir, std::optional<std::size_t> grid_n,
                         std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        auto table = io::parse_u_profile(io::read_file(input), input.string());
        // A row at r = 0 is dropped: densities are stored on (0, R].
        if (table.x.front() == 0.0) {
            table.x.erase(table.x.begin());
            table.y.erase(table.y.begin());
        }
        if (table.x.size() < 2) {
            throw io::ParseError(input.string(), 0, "need at least 2 rows with r > 0");
        }
        for (const double u : table.y) {
            if (u < 0.0) {
                throw io::ParseError(input.string(), 0, "density must be nonnegative");
            }
        }
        Params p = io::header_params(table.header, input.string(), 1.0);
        RadialProfile u(table.x, table.y, p);
        const auto cum = detail::cumulative_radial_mass(u);
        p = make_params(p.n, p.R, p.beta, p.omega_n * cum.back());
        u = RadialProfile(table.x, table.y, p);

        const SGrid grid = [&] {
            if (grid_n) {
                return make_uniform_grid(0.0, p.volume_extent(), *grid_n);
            }
            std::vector<double> nodes{0.0};
            for (const double r : u.r) {
                nodes.push_back(std::pow(r, p.n));
            }
            nodes.back() = p.volume_extent();
            return SGrid(std::move(nodes), GradingSpec{Grading::Uniform, 1.0, 1.0}, 1e6);
        }();
        const auto w = accumulate(u, grid);
        const auto vr = signal_gradient(u, p);
        const auto v = signal_reconstruct(vr);
        fs::create_directories(out_dir);
        io::write_w_profile(out_dir / "w.csv", w, p);
        io::write_file(out_dir / "vr.csv", io::format_radial("vr", vr));
        io::write_file(out_dir / "v.csv", io::format_radial("v", v));
        const double ratio = signal_gradient_ratio(vr);
        const double bound = signal_gradient_constant(u);
        out << "mass=" << io::format_double(p.m) << " mu=" << io::format_double(p.mu)
            << " sup|v_r|/r=" << io::format_double(ratio) << " C=" << io::format_double(bound)
            << " bound_holds=" << (ratio <= bound * (1.0 + 1e-12) ? "true" : "false") << "\n";
        return kOk;
    });
}

}  // namespace degenchem::cli
