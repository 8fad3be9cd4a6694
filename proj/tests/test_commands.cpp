#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "whichway/commands.hpp"
#include "whichway/csv.hpp"
#include "whichway/errors.hpp"

using namespace whichway;

namespace {

RunConfig small_config(const std::string& out) {
    RunConfig cfg;
    cfg.grid_points = 301;
    cfg.out_path = out;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double column_absmax(const CsvTable& t, const std::string& name) {
    double worst = 0.0;
    for (double v : t.column(name)) worst = std::max(worst, std::abs(v));
    return worst;
}

} // namespace

TEST_CASE("simulate: normalized columns, identity column, symmetry") {
    const std::string out = "cmd_sim_tmp.csv";
    const RunConfig cfg = small_config(out);
    cmd_simulate(cfg);
    const CsvTable t = read_csv(out);
    REQUIRE(t.columns.size() == 9);
    REQUIRE(t.rows.size() == cfg.grid_points);

    const auto y = t.column("y_m");
    const auto p_ab = t.column("P_AB");
    const auto p_da = t.column("P_DA");
    const auto p_db = t.column("P_DB");
    const std::size_t mid = t.rows.size() / 2;
    CHECK(y[mid] == 0.0);
    CHECK(p_ab[mid] == 1.0);

    CHECK(column_absmax(t, "I_AB") < 1e-12);
    const double d1max = column_absmax(t, "Delta1");
    CHECK(d1max > 1e-3);
    CHECK(d1max < 1e-1);

    const auto p_dadb = t.column("P_DADB");
    const auto p_dab = t.column("P_DAB");
    const auto d2 = t.column("Delta2");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(p_ab[i] >= 0.0);
        CHECK(p_da[i] >= 0.0);
        CHECK(p_db[i] >= 0.0);
        CHECK(p_dadb[i] >= 0.0);
        CHECK(p_dab[i] >= 0.0);
        CHECK(std::abs(p_db[i] - p_da[t.rows.size() - 1 - i]) < 1e-10);
        CHECK(std::abs(d2[i] - d2[t.rows.size() - 1 - i]) < 1e-10);
    }

    // embedded echo reproduces the config
    CHECK(config_from_csv_comments(t.comments) == cfg);

    // byte-identical on re-run
    const std::string first = slurp(out);
    cmd_simulate(cfg);
    CHECK(slurp(out) == first);
    std::remove(out.c_str());
}

TEST_CASE("simulate: classical-only zeroes the difference columns") {
    const std::string out = "cmd_sim_cl_tmp.csv";
    RunConfig cfg = small_config(out);
    cfg.classical_only = true;
    cmd_simulate(cfg);
    const CsvTable t = read_csv(out);
    CHECK(column_absmax(t, "Delta1") < 1e-14);
    CHECK(column_absmax(t, "Delta2") < 1e-14);
    std::remove(out.c_str());
}

TEST_CASE("simulate: coarse quadrature trips the convergence gate") {
    RunConfig cfg = small_config("cmd_sim_conv_tmp.csv");
    // composite Simpson at 16 nodes per wavelength sits around 1e-4
    cfg.scheme = QuadScheme::Simpson;
    CHECK_THROWS_AS(cmd_simulate(cfg), ConvergenceError);
}

TEST_CASE("sweep: profile blocks and the pairwise summary") {
    const std::string out = "cmd_sweep_tmp.csv";
    RunConfig cfg = small_config(out);
    cfg.efficiencies = {0.0, 0.5, 1.0};
    cmd_sweep_efficiency(cfg);

    const CsvTable summary = read_csv(out);
    REQUIRE(summary.columns.size() == 21);  // n + 10 pairs x 2 variants
    REQUIRE(summary.rows.size() == 3);

    // n = 0: every primed profile equals P_AB, every distance vanishes
    for (std::size_t c = 1; c < summary.columns.size(); ++c)
        CHECK(std::abs(summary.rows[0][c]) < 1e-13);

    // classical-only at n = 1: single and double markers coincide
    const std::size_t cl_idx = summary.column_index("dav_DA_DADB_cl");
    CHECK(std::abs(summary.rows[2][cl_idx]) < 1e-13);
    // but differ with the two-slit contribution present
    const std::size_t ho_idx = summary.column_index("dav_DA_DADB");
    CHECK(summary.rows[2][ho_idx] > 1e-3);

    const CsvTable profiles = read_csv(profiles_path_for(out));
    REQUIRE(profiles.columns.size() == 8);
    // 2 variants x 3 efficiencies x grid
    CHECK(profiles.rows.size() == 2 * 3 * cfg.grid_points);
    std::remove(out.c_str());
    std::remove(profiles_path_for(out).c_str());
}

TEST_CASE("invert: round trip through files, then a corrupted cell") {
    const std::string sweep_out = "cmd_inv_sweep_tmp.csv";
    RunConfig cfg = small_config(sweep_out);
    cfg.efficiencies = {0.75};
    cmd_sweep_efficiency(cfg);
    const std::string profiles = profiles_path_for(sweep_out);

    RunConfig inv_cfg = small_config("cmd_inv_out_tmp.csv");
    inv_cfg.efficiencies = {0.75};
    cmd_invert(inv_cfg, profiles);
    const CsvTable rec = read_csv(inv_cfg.out_path);
    REQUIRE(rec.rows.size() == cfg.grid_points);
    CHECK(column_absmax(rec, "I_AB") < 1e-10);

    // corrupt one measured value on the higher-order block
    CsvTable meas = read_csv(profiles);
    const std::size_t ho = meas.column_index("higher_order");
    const std::size_t da = meas.column_index("Pp_DA");
    std::size_t corrupted = meas.rows.size();
    for (std::size_t r = 0; r < meas.rows.size(); ++r) {
        if (meas.rows[r][ho] == 1.0 && r % 37 == 5) {
            meas.rows[r][da] += 0.1;
            corrupted = r;
            break;
        }
    }
    REQUIRE(corrupted < meas.rows.size());
    const std::string corrupted_path = "cmd_inv_corrupt_tmp.csv";
    {
        CsvWriter w(corrupted_path);
        w.header(meas.columns);
        for (const auto& row : meas.rows) w.row(row);
        w.close();
    }
    RunConfig inv2 = small_config("cmd_inv_out2_tmp.csv");
    inv2.efficiencies = {0.75};
    cmd_invert(inv2, corrupted_path);
    const CsvTable rec2 = read_csv(inv2.out_path);
    const double y_bad = meas.rows[corrupted][meas.column_index("y_m")];
    const auto ys = rec2.column("y_m");
    const auto born = rec2.column("I_AB");
    bool found = false;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] == y_bad) {
            CHECK(std::abs(born[i]) > 0.1);
            found = true;
        } else {
            CHECK(std::abs(born[i]) < 1e-10);
        }
    }
    CHECK(found);

    // efficiency list must be a single value in (0, 1]
    RunConfig inv_bad = small_config("cmd_inv_bad_tmp.csv");
    inv_bad.efficiencies = {0.0};
    CHECK_THROWS_AS(cmd_invert(inv_bad, profiles), ConfigError);
    inv_bad.efficiencies = {0.25, 0.5};
    CHECK_THROWS_AS(cmd_invert(inv_bad, profiles), ConfigError);

    // missing column
    const std::string bad_cols = "cmd_inv_badcols_tmp.csv";
    {
        CsvWriter w(bad_cols);
        w.header({"y_m", "P_AB"});
        w.row({0.0, 1.0});
        w.row({1.0, 1.0});
        w.close();
    }
    RunConfig inv3 = small_config("cmd_inv_out3_tmp.csv");
    inv3.efficiencies = {0.5};
    CHECK_THROWS_AS(cmd_invert(inv3, bad_cols), ConfigError);

    std::remove(sweep_out.c_str());
    std::remove(profiles.c_str());
    std::remove(inv_cfg.out_path.c_str());
    std::remove(corrupted_path.c_str());
    std::remove(inv2.out_path.c_str());
    std::remove(bad_cols.c_str());
}

TEST_CASE("sorkin: pairwise cancellation, symmetry, and corrections") {
    const std::string out = "cmd_sorkin_tmp.csv";
    RunConfig cfg = small_config(out);
    cfg.classical_only = true;
    cmd_sorkin(cfg);
    const CsvTable cancel = read_csv(out);
    CHECK(column_absmax(cancel, "I_ABC") < 1e-12);

    cfg.classical_only = false;
    cmd_sorkin(cfg);
    const CsvTable full = read_csv(out);
    const auto sorkin = full.column("I_ABC");
    const auto p_abc = full.column("P_ABC");
    CHECK(p_abc[full.rows.size() / 2] == 1.0);
    CHECK(column_absmax(full, "I_ABC") > 1e-4);
    for (std::size_t i = 0; i < sorkin.size(); ++i)
        CHECK(std::abs(sorkin[i] - sorkin[sorkin.size() - 1 - i]) < 1e-10);

    bool flagged = false;
    for (const auto& comment : full.comments)
        flagged = flagged || comment.rfind("psi_abc = 0", 0) == 0;
    CHECK(flagged);

    // overlapping layout is rejected
    RunConfig bad = small_config(out);
    bad.slit_centers = {0.0, 300e-9, 2000e-9};
    CHECK_THROWS_AS(cmd_sorkin(bad), ConfigError);
    std::remove(out.c_str());
}
