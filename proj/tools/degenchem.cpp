// degenchem: batch front end (transform | run | certify | verify | sweep).

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degenchem/cli.hpp"
#include "degenchem/config.hpp"

namespace {

namespace fs = std::filesystem;
using namespace degenchem;

struct CommonFlags {
    std::string config;
    std::string out;
    std::string eps_list;
    std::optional<std::size_t> grid_n;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required) {
    auto* opt = cmd->add_option("--config", f.config, "run configuration (INI, dotted keys)");
    if (config_required) {
        opt->required();
    }
    cmd->add_option("--out", f.out, "output directory (overrides output.dir)");
    cmd->add_option("--eps-list", f.eps_list, "comma-separated eps values, strictly decreasing");
    cmd->add_option("--grid-n", f.grid_n, "number of grid nodes (overrides grid.n)");
}

cli::Overrides overrides_from(const CommonFlags& f) {
    cli::Overrides o;
    if (!f.out.empty()) o.out = f.out;
    if (!f.eps_list.empty()) o.eps_list = parse_number_list(f.eps_list, "--eps-list");
    o.grid_n = f.grid_n;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degenchem: degenerate chemotaxis laboratory in the volume variable"};
    app.require_subcommand(1);
    bool seedless = false;
    app.add_flag("--seedless", seedless, "reserved; nothing here uses random numbers, so setting it is an error");

    CommonFlags run_flags;
    auto* run = app.add_subcommand("run", "evolve the configured problem and write a run directory");
    add_common(run, run_flags, true);

    CommonFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "evolve the eps-family and write one directory per member");
    add_common(sweep, sweep_flags, true);

    std::string transform_input;
    CommonFlags transform_flags;
    auto* transform = app.add_subcommand("transform", "u-profile CSV to w, v_r and v profiles");
    transform->add_option("input", transform_input, "u-profile CSV")->required();
    transform->add_option("--out", transform_flags.out, "output directory")->required();
    transform->add_option("--grid-n", transform_flags.grid_n, "uniform s-grid with this many nodes");

    std::string certify_dir;
    std::string certify_config;
    std::optional<double> certify_gamma;
    std::optional<double> certify_m0;
    auto* certify = app.add_subcommand("certify", "blow-up certificate for a run directory");
    certify->add_option("run_dir", certify_dir, "run directory")->required();
    certify->add_option("--config", certify_config, "analysis settings (analysis.gamma, analysis.m0)");
    certify->add_option("--gamma", certify_gamma, "override gamma");
    certify->add_option("--m0", certify_m0, "override m0");

    std::string verify_dir;
    auto* verify = app.add_subcommand("verify", "property report for a run or family directory");
    verify->add_option("run_dir", verify_dir, "run or family directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }
    if (seedless) {
        std::cerr << "error: --seedless is reserved; runs are deterministic and use no random numbers\n";
        return cli::kUsage;
    }

    const auto load = [](const std::string& path, RunConfig& cfg) {
        return cli::guarded(std::cerr, [&] {
            cfg = load_config(path);
            return 0;
        });
    };

    if (*run || *sweep) {
        const auto& flags = *run ? run_flags : sweep_flags;
        RunConfig cfg;
        if (const int code = load(flags.config, cfg); code != 0) {
            return code;
        }
        cli::Overrides o;
        if (const int code = cli::guarded(std::cerr, [&] {
                o = overrides_from(flags);
                return 0;
            });
            code != 0) {
            return code;
        }
        const fs::path base = fs::path(flags.config).parent_path();
        return *run ? cli::cmd_run(cfg, o, std::cout, std::cerr, base)
                    : cli::cmd_sweep(cfg, o, std::cout, std::cerr, base);
    }
    if (*transform) {
        return cli::cmd_transform(transform_input, transform_flags.out, transform_flags.grid_n, std::cout, std::cerr);
    }
    if (*certify) {
        AnalysisConfig analysis;
        if (!certify_config.empty()) {
            RunConfig cfg;
            if (const int code = load(certify_config, cfg); code != 0) {
                return code;
            }
            analysis = cfg.analysis;
        }
        if (certify_gamma) analysis.gamma = certify_gamma;
        if (certify_m0) analysis.m0 = certify_m0;
        return cli::cmd_certify(certify_dir, analysis, std::cout, std::cerr);
    }
    if (*verify) {
        return cli::cmd_verify(verify_dir, std::cout, std::cerr);
    }
    return cli::kUsage;
}
