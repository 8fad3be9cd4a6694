#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "whichway/commands.hpp"
#include "whichway/errors.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string mode;
    std::string efficiency;
    std::string window;
    int nodes_per_wavelength = 0;
    bool classical_only = false;

    bool has_mode = false;
    bool has_efficiency = false;
    bool has_window = false;
    bool has_nodes = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "key = value config file");
    cmd->add_option("--out", opts.out_path, "output CSV path");
    cmd->add_option("--mode", opts.mode, "fraunhofer or exact")
        ->check(CLI::IsMember({"fraunhofer", "exact"}));
    cmd->add_flag("--classical-only", opts.classical_only,
                  "drop the two-slit path contribution");
    cmd->add_option("--nodes-per-wavelength", opts.nodes_per_wavelength,
                    "quadrature nodes per wavelength of path variation");
    cmd->add_option("--efficiency", opts.efficiency,
                    "comma-separated detector efficiencies in [0,1]");
    cmd->add_option("--window", opts.window,
                    "averaging window 'y1,y2' (length suffixes allowed)");
}

whichway::RunConfig build_config(const CLI::App* cmd, const CommonOpts& opts,
                                 const std::string& default_out) {
    whichway::RunConfig cfg;
    if (cmd->count("--config"))
        cfg = whichway::load_config_file(opts.config_path);
    // Flags override file values; reuse the config-line parser.
    if (cmd->count("--mode"))
        whichway::apply_config_line(cfg, "mode = " + opts.mode);
    if (cmd->count("--classical-only"))
        whichway::apply_config_line(cfg, "classical_only = true");
    if (cmd->count("--nodes-per-wavelength"))
        whichway::apply_config_line(
            cfg, "nodes_per_wavelength = " +
                     std::to_string(opts.nodes_per_wavelength));
    if (cmd->count("--efficiency"))
        whichway::apply_config_line(cfg, "efficiency = " + opts.efficiency);
    if (cmd->count("--window"))
        whichway::apply_config_line(cfg, "window = " + opts.window);
    if (cmd->count("--out")) cfg.out_path = opts.out_path;
    if (cfg.out_path.empty()) cfg.out_path = default_out;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double-slit interference with two-slit paths and "
                 "which-way detector models"};
    app.require_subcommand(1);

    CommonOpts sim_opts, sweep_opts, invert_opts, sorkin_opts;
    std::string measured_path;

    CLI::App* sim = app.add_subcommand(
        "simulate", "screen profiles for the five detector configurations");
    add_common(sim, sim_opts);

    CLI::App* sweep = app.add_subcommand(
        "sweep-efficiency", "primed profiles and Delta'_av vs efficiency");
    add_common(sweep, sweep_opts);

    CLI::App* invert = app.add_subcommand(
        "invert", "recover perfect profiles from measured imperfect ones");
    add_common(invert, invert_opts);
    invert->add_option("--measured", measured_path,
                       "CSV with y_m, P_AB, Pp_DA, Pp_DB, Pp_DADB, Pp_DAB")
        ->required();

    CLI::App* sorkin = app.add_subcommand(
        "sorkin", "triple-slit probabilities and the Sorkin combination");
    add_common(sorkin, sorkin_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed())
            whichway::cmd_simulate(build_config(sim, sim_opts, "simulate.csv"));
        else if (sweep->parsed())
            whichway::cmd_sweep_efficiency(
                build_config(sweep, sweep_opts, "sweep.csv"));
        else if (invert->parsed())
            whichway::cmd_invert(build_config(invert, invert_opts, "invert.csv"),
                                 measured_path);
        else if (sorkin->parsed())
            whichway::cmd_sorkin(
                build_config(sorkin, sorkin_opts, "sorkin.csv"));
    } catch (const whichway::ConvergenceError& e) {
        std::cerr << "whichway: " << e.what() << '\n';
        return 2;
    } catch (const whichway::IoError& e) {
        std::cerr << "whichway: " << e.what() << '\n';
        return 3;
    } catch (const whichway::ConfigError& e) {
        std::cerr << "whichway: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "whichway: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
