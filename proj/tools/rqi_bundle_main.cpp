#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rqi/scenario.hpp"

namespace {

struct CliOptions {
    std::string scenario, center, axis, shell, rapidities, out, format;
    std::string mass, spin, width, order, grid_n, box_sigmas, seed;
    std::string config_file;
};

void override_if_set(const CLI::App& run, const char* flag,
                     rqi::ScenarioConfig& cfg, const std::string& key,
                     const std::string& value) {
    if (run.count(flag) > 0) rqi::apply_config_entry(cfg, key, value);
}

int run_command(const CLI::App& run, const CliOptions& opt) {
    rqi::ScenarioConfig cfg;
    try {
        if (!opt.config_file.empty())
            rqi::load_config_file(cfg, opt.config_file);
        override_if_set(run, "--scenario", cfg, "scenario", opt.scenario);
        override_if_set(run, "--mass", cfg, "mass", opt.mass);
        override_if_set(run, "--spin", cfg, "spin_doubled", opt.spin);
        override_if_set(run, "--shell", cfg, "shell", opt.shell);
        override_if_set(run, "--center", cfg, "center", opt.center);
        override_if_set(run, "--width", cfg, "width", opt.width);
        override_if_set(run, "--axis", cfg, "axis", opt.axis);
        override_if_set(run, "--rapidity", cfg, "rapidities", opt.rapidities);
        override_if_set(run, "--order", cfg, "order", opt.order);
        override_if_set(run, "--grid-n", cfg, "grid_n", opt.grid_n);
        override_if_set(run, "--box-sigmas", cfg, "box_sigmas",
                        opt.box_sigmas);
        override_if_set(run, "--out", cfg, "out", opt.out);
        override_if_set(run, "--format", cfg, "format", opt.format);
        override_if_set(run, "--seed", cfg, "seed", opt.seed);
        rqi::validate_config(cfg);
    } catch (const rqi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    try {
        const rqi::ScenarioReport rep = rqi::run_scenario(cfg);
        if (cfg.out.empty()) {
            rqi::write_report(rep, std::cout);
        } else {
            std::ofstream os(cfg.out, std::ios::binary);
            if (!os) {
                std::cerr << "config error: cannot write output file: "
                          << cfg.out << "\n";
                return 2;
            }
            rqi::write_report(rep, os);
        }
    } catch (const rqi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const rqi::CoverageError& e) {
        std::cerr << "coverage failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rqi-bundle: scenario runner for massive single-particle "
                 "state spaces"};
    app.set_version_flag("--version", rqi::kLibraryVersion);
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* run = app.add_subcommand("run", "Run a named scenario");
    run->footer(rqi::scenario_help_text());
    run->add_option("--scenario", opt.scenario, "Scenario name");
    run->add_option("--mass", opt.mass, "Particle mass (default 1)");
    run->add_option("--spin", opt.spin, "Doubled spin 2s (default 1)");
    run->add_option("--shell", opt.shell, "Mass shell: plus|minus");
    run->add_option("--center", opt.center,
                    "Momentum profile center as x,y,z");
    run->add_option("--width", opt.width, "Momentum profile width");
    run->add_option("--axis", opt.axis, "Boost axis: x|y|z or x,y,z");
    run->add_option("--rapidity", opt.rapidities,
                    "Comma-separated rapidity list");
    run->add_option("--order", opt.order, "Quadrature order per axis");
    run->add_option("--grid-n", opt.grid_n,
                    "Position grid points per axis");
    run->add_option("--box-sigmas", opt.box_sigmas,
                    "Momentum box half width in profile widths");
    run->add_option("--out", opt.out, "Output path (default stdout)");
    run->add_option("--format", opt.format, "Output format: csv|json");
    run->add_option("--seed", opt.seed, "Random seed for sampled scenarios");
    run->add_option("config-file", opt.config_file,
                    "Flat key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return run_command(*run, opt);
}
