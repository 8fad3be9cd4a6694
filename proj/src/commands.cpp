#include "whichway/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "whichway/csv.hpp"
#include "whichway/detection.hpp"
#include "whichway/detectors.hpp"
#include "whichway/errors.hpp"
#include "whichway/propagators.hpp"

namespace whichway {

namespace {

std::string hash_line(const RunConfig& cfg) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%016llx",
                  static_cast<unsigned long long>(config_hash(cfg)));
    return std::string("config_hash = ") + buf;
}

void write_config_block(CsvWriter& out, const RunConfig& cfg) {
    out.comment("[config]");
    std::istringstream echo(config_echo(cfg));
    std::string line;
    while (std::getline(echo, line)) out.comment(line);
    out.comment("[/config]");
}

std::vector<double> convergence_probes(const RunConfig& cfg) {
    return {cfg.grid_min, 0.5 * cfg.grid_min, 0.0, 0.5 * cfg.grid_max,
            cfg.grid_max};
}

// Field-level convergence gate shared by the double-slit commands.
double checked_convergence(const RunConfig& cfg, const SlitGeometry& geom,
                           const QuadratureSpec& quad) {
    const auto probes = convergence_probes(cfg);
    const double est = self_convergence_estimate(geom, quad, probes);
    if (est > cfg.convergence_tol) {
        std::ostringstream msg;
        msg << "quadrature self-convergence " << est << " exceeds tolerance "
            << cfg.convergence_tol
            << " (raise nodes_per_wavelength or convergence_tol)";
        throw ConvergenceError(msg.str());
    }
    return est;
}

void validate_efficiencies(const RunConfig& cfg) {
    if (cfg.efficiencies.empty())
        throw ConfigError("efficiency: list must not be empty");
    for (double n : cfg.efficiencies)
        if (!(n >= 0.0 && n <= 1.0))
            throw ConfigError("efficiency: values must lie in [0, 1]");
}

constexpr std::array<const char*, 5> kProfileTags = {"AB", "DA", "DB", "DADB",
                                                     "DAB"};

} // namespace

RunConfig config_from_csv_comments(const std::vector<std::string>& comments) {
    RunConfig cfg;
    bool inside = false;
    for (const auto& line : comments) {
        if (line == "[config]") { inside = true; continue; }
        if (line == "[/config]") break;
        if (inside) apply_config_line(cfg, line);
    }
    return cfg;
}

std::string profiles_path_for(const std::string& out_path) {
    const std::size_t dot = out_path.find_last_of('.');
    const std::size_t slash = out_path.find_last_of("/\\");
    if (dot == std::string::npos ||
        (slash != std::string::npos && dot < slash))
        return out_path + "_profiles";
    return out_path.substr(0, dot) + "_profiles" + out_path.substr(dot);
}

void cmd_simulate(const RunConfig& cfg) {
    const SlitGeometry geom = cfg.geometry();
    const ScreenGrid grid = cfg.grid();
    const QuadratureSpec quad = cfg.quadrature();
    const double conv = checked_convergence(cfg, geom, quad);

    const WaveComponents wc =
        compute_wave_components(geom, grid, quad, cfg.classical_only);
    const SetupDistributions sd = perfect_distributions(wc);
    const auto d1 = delta1(sd);
    const auto d2 = delta2(sd);
    const auto born = born_parameter(sd);

    CsvWriter out(cfg.out_path);
    out.comment("whichway simulate");
    out.comment(hash_line(cfg));
    out.comment("quadrature_self_convergence = " + format_double(conv));
    write_config_block(out, cfg);
    out.header({"y_m", "P_AB", "P_DA", "P_DB", "P_DADB", "P_DAB", "Delta1",
                "Delta2", "I_AB"});
    const double s = 1.0 / sd.norm;
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.row({grid.y[i], sd.p_ab[i] * s, sd.p_da[i] * s, sd.p_db[i] * s,
                 sd.p_dadb[i] * s, sd.p_dab[i] * s, d1[i] * s, d2[i] * s,
                 born[i] * s});
    out.close();
}

void cmd_sweep_efficiency(const RunConfig& cfg) {
    validate_efficiencies(cfg);
    const SlitGeometry geom = cfg.geometry();
    const ScreenGrid grid = cfg.grid();
    const QuadratureSpec quad = cfg.quadrature();
    const double conv = checked_convergence(cfg, geom, quad);

    // Variant 0: full fields. Variant 1: two-slit contribution removed.
    WaveComponents wc = compute_wave_components(geom, grid, quad, false);
    SetupDistributions sd[2];
    sd[0] = perfect_distributions(wc);
    std::fill(wc.psi_ab.begin(), wc.psi_ab.end(), Complex{0.0, 0.0});
    sd[1] = perfect_distributions(wc);

    const std::string profiles_path = profiles_path_for(cfg.out_path);
    CsvWriter profiles(profiles_path);
    profiles.comment("whichway sweep-efficiency profiles");
    profiles.comment(hash_line(cfg));
    profiles.comment("quadrature_self_convergence = " + format_double(conv));
    write_config_block(profiles, cfg);
    profiles.header({"higher_order", "n", "y_m", "P_AB", "Pp_DA", "Pp_DB",
                     "Pp_DADB", "Pp_DAB"});

    CsvWriter summary(cfg.out_path);
    summary.comment("whichway sweep-efficiency summary");
    summary.comment(hash_line(cfg));
    summary.comment("quadrature_self_convergence = " + format_double(conv));
    summary.comment("delta_av window and normalization: see [config]; "
                    "columns with suffix _cl zero the two-slit contribution");
    write_config_block(summary, cfg);

    std::vector<std::string> cols = {"n"};
    for (int variant = 0; variant < 2; ++variant)
        for (std::size_t i = 0; i < kProfileTags.size(); ++i)
            for (std::size_t j = i + 1; j < kProfileTags.size(); ++j)
                cols.push_back(std::string("dav_") + kProfileTags[i] + "_" +
                               kProfileTags[j] + (variant ? "_cl" : ""));
    summary.header(cols);

    for (double n : cfg.efficiencies) {
        std::vector<double> row = {n};
        for (int variant = 0; variant < 2; ++variant) {
            const SetupDistributions& base = sd[variant];
            const ImperfectDistributions imp = imperfect_from_perfect(base, n);
            const double s = 1.0 / base.norm;

            for (std::size_t i = 0; i < grid.size(); ++i)
                profiles.row({variant ? 0.0 : 1.0, n, grid.y[i],
                              base.p_ab[i] * s, imp.p_da[i] * s,
                              imp.p_db[i] * s, imp.p_dadb[i] * s,
                              imp.p_dab[i] * s});

            const std::array<const std::vector<double>*, 5> prof = {
                &base.p_ab, &imp.p_da, &imp.p_db, &imp.p_dadb, &imp.p_dab};
            for (std::size_t i = 0; i < prof.size(); ++i)
                for (std::size_t j = i + 1; j < prof.size(); ++j)
                    row.push_back(delta_av(*prof[i], *prof[j], grid,
                                           cfg.window_lo, cfg.window_hi) *
                                  s);
        }
        summary.row(row);
    }
    profiles.close();
    summary.close();
}

void cmd_invert(const RunConfig& cfg, const std::string& measured_path) {
    if (cfg.efficiencies.size() != 1)
        throw ConfigError(
            "invert: --efficiency must provide exactly one value");
    const double n = cfg.efficiencies.front();
    if (!(n > 0.0 && n <= 1.0))
        throw ConfigError("invert: efficiency must lie in (0, 1]");

    const CsvTable table = read_csv(measured_path);
    std::vector<std::size_t> keep;
    const bool has_n = table.has_column("n");
    const bool has_ho = table.has_column("higher_order");
    const std::size_t n_idx = has_n ? table.column_index("n") : 0;
    const std::size_t ho_idx = has_ho ? table.column_index("higher_order") : 0;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (has_n && std::abs(table.rows[r][n_idx] - n) > 1e-12) continue;
        if (has_ho && table.rows[r][ho_idx] != 1.0) continue;
        keep.push_back(r);
    }
    if (keep.size() < 2)
        throw ConfigError(has_n
                              ? "invert: no rows match the requested efficiency"
                              : "invert: need at least two data rows");

    const std::size_t iy = table.column_index("y_m");
    const std::size_t iab = table.column_index("P_AB");
    const std::size_t ida = table.column_index("Pp_DA");
    const std::size_t idb = table.column_index("Pp_DB");
    const std::size_t idadb = table.column_index("Pp_DADB");
    const std::size_t idab = table.column_index("Pp_DAB");

    ImperfectDistributions imp;
    imp.efficiency = n;
    std::vector<double> p_ab;
    for (std::size_t r : keep) {
        const auto& row = table.rows[r];
        imp.grid.y.push_back(row[iy]);
        p_ab.push_back(row[iab]);
        imp.p_da.push_back(row[ida]);
        imp.p_db.push_back(row[idb]);
        imp.p_dadb.push_back(row[idadb]);
        imp.p_dab.push_back(row[idab]);
    }
    for (std::size_t i = 1; i < imp.grid.y.size(); ++i)
        if (!(imp.grid.y[i] > imp.grid.y[i - 1]))
            throw ConfigError("invert: y_m column must be strictly increasing");

    const SetupDistributions sd = invert_imperfect(imp, p_ab, n);
    const auto born = born_parameter(sd);

    CsvWriter out(cfg.out_path);
    out.comment("whichway invert");
    out.comment("source = " + measured_path);
    out.comment("efficiency = " + format_double(n));
    out.header({"y_m", "P_AB", "P_DA", "P_DB", "P_DADB", "P_DAB", "I_AB"});
    for (std::size_t i = 0; i < sd.grid.size(); ++i)
        out.row({sd.grid.y[i], sd.p_ab[i], sd.p_da[i], sd.p_db[i],
                 sd.p_dadb[i], sd.p_dab[i], born[i]});
    out.close();
}

void cmd_sorkin(const RunConfig& cfg) {
    RunConfig echo_cfg = cfg;
    echo_cfg.slit_centers = cfg.sorkin_centers();
    const SlitGeometry geom = cfg.geometry();
    const ScreenGrid grid = cfg.grid();
    const QuadratureSpec quad = cfg.quadrature();
    const auto centers = echo_cfg.slit_centers;

    // Convergence probe on the full three-slit result.
    ScreenGrid probe_grid;
    probe_grid.y = convergence_probes(cfg);
    std::sort(probe_grid.y.begin(), probe_grid.y.end());
    QuadratureSpec fine = quad;
    fine.nodes_per_wavelength *= 2;
    double conv = 0.0;
    try {
        const auto coarse = triple_slit_probabilities(
            geom, centers, probe_grid, quad, cfg.classical_only);
        const auto refined = triple_slit_probabilities(
            geom, centers, probe_grid, fine, cfg.classical_only);
        for (std::size_t i = 0; i < probe_grid.size(); ++i) {
            const double scale = std::max(refined.p_abc[i], 1e-300);
            conv = std::max(conv,
                            std::abs(refined.p_abc[i] - coarse.p_abc[i]) / scale);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (conv > cfg.convergence_tol) {
        std::ostringstream msg;
        msg << "quadrature self-convergence " << conv << " exceeds tolerance "
            << cfg.convergence_tol;
        throw ConvergenceError(msg.str());
    }

    TripleSlitProbabilities tp;
    try {
        tp = triple_slit_probabilities(geom, centers, grid, quad,
                                       cfg.classical_only);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto sorkin = sorkin_parameter(tp);
    const double norm = tp.p_abc[grid.center_index()];
    if (!(norm > 0.0))
        throw ConfigError("sorkin: central P_ABC vanishes");

    CsvWriter out(cfg.out_path);
    out.comment("whichway sorkin");
    out.comment(hash_line(echo_cfg));
    out.comment("quadrature_self_convergence = " + format_double(conv));
    out.comment("psi_abc = 0 (three-slit path remainder beyond pairwise "
                "corrections is not modeled)");
    write_config_block(out, echo_cfg);
    out.header({"y_m", "P_ABC", "P_AB", "P_AC", "P_BC", "P_A", "P_B", "P_C",
                "I_ABC"});
    const double s = 1.0 / norm;
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.row({grid.y[i], tp.p_abc[i] * s, tp.p_ab[i] * s, tp.p_ac[i] * s,
                 tp.p_bc[i] * s, tp.p_a[i] * s, tp.p_b[i] * s, tp.p_c[i] * s,
                 sorkin[i] * s});
    out.close();
}

} // namespace whichway
