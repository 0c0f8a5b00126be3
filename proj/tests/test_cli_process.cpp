// End-to-end checks of the ro binary: exit codes, output files, and
// byte-stable reruns. RO_BIN is injected by CMake.
#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "relopt/calendar.hpp"
#include "relopt/seasonality.hpp"
#include "support.hpp"

namespace {

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

struct RunOutcome {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunOutcome run_cli(const std::string& args) {
    const std::string out_file = temp_path("cli_out.txt");
    const std::string cmd = std::string(RO_BIN) + " " + args + " > " + out_file + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunOutcome result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream text;
    text << in.rdbuf();
    result.output = text.str();
    return result;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string ou_config_text() {
    return "model = ou\n"
           "contract.strike = 40\n"
           "ou.lambda = 294.84\n"
           "ou.sigma = 6.5932\n"
           "ou.seasonality.alpha = 3.79\n"
           "mc.n_paths = 400\n"
           "mc.steps_per_year = 400\n"
           "mc.seed = 3\n"
           "contract.t1 = 0.5\n"
           "contract.t2 = 1.5\n";
}

} // namespace

TEST(CliProcess, PriceClosedFormAndByteStableReruns) {
    const std::string cfg = temp_path("ou.cfg");
    write_file(cfg, ou_config_text());

    const RunOutcome first = run_cli("price --config " + cfg);
    ASSERT_EQ(first.exit_code, 0) << first.output;
    EXPECT_NE(first.output.find("\"method\": \"closed_form\""), std::string::npos);
    EXPECT_NE(first.output.find("\"within_bounds\": true"), std::string::npos);

    const RunOutcome second = run_cli("price --config " + cfg);
    EXPECT_EQ(first.output, second.output);
}

TEST(CliProcess, PriceMonteCarloSeedStable) {
    const std::string cfg = temp_path("ou_mc.cfg");
    write_file(cfg, ou_config_text());
    const RunOutcome a = run_cli("price --config " + cfg + " --method mc --threads 2");
    const RunOutcome b = run_cli("price --config " + cfg + " --method mc --threads 1");
    ASSERT_EQ(a.exit_code, 0) << a.output;
    EXPECT_NE(a.output.find("\"method\": \"monte_carlo\""), std::string::npos);
    EXPECT_NE(a.output.find("std_error"), std::string::npos);
    EXPECT_EQ(a.output, b.output);  // worker count must not leak into values

    const RunOutcome c = run_cli("price --config " + cfg + " --method mc --seed 99");
    EXPECT_NE(c.output, a.output);  // different stream
}

TEST(CliProcess, ShiftedModelDispatch) {
    const std::string cfg = temp_path("shifted.cfg");
    write_file(cfg,
               "model = shifted_two_ou\n"
               "two_ou.p.lambda = 294.84\ntwo_ou.p.sigma = 6.5932\n"
               "two_ou.p.seasonality.alpha = 3.79\n"
               "two_ou.k.lambda = 294.84\ntwo_ou.k.sigma = 6.5932\n"
               "two_ou.k.seasonality.alpha = 3.69\n"
               "shifted.p_floor = 20\nshifted.k_floor = 0\n"
               "mc.n_paths = 300\nmc.steps_per_year = 300\n"
               "contract.t1 = 0.5\ncontract.t2 = 1.0\n");

    const RunOutcome autorun = run_cli("price --config " + cfg);
    ASSERT_EQ(autorun.exit_code, 0) << autorun.output;
    EXPECT_NE(autorun.output.find("\"method\": \"monte_carlo\""), std::string::npos);

    const RunOutcome forced_cf = run_cli("price --config " + cfg + " --method cf");
    EXPECT_EQ(forced_cf.exit_code, 2);
    EXPECT_NE(forced_cf.output.find("no closed form; use Monte Carlo"), std::string::npos);
}

TEST(CliProcess, ExitCodes) {
    // Unknown config key -> usage error (2).
    const std::string bad_cfg = temp_path("bad.cfg");
    write_file(bad_cfg, ou_config_text() + "ou.sgima = 1\n");
    EXPECT_EQ(run_cli("price --config " + bad_cfg).exit_code, 2);

    // Malformed data file -> data error (3).
    const std::string bad_csv = temp_path("bad.csv");
    write_file(bad_csv, "timestamp,price\n2016-01-01T00:00,oops\n");
    EXPECT_EQ(run_cli("calibrate --data " + bad_csv + " --out " + temp_path("r.json")).exit_code,
              3);

    // Missing file -> data error (3).
    EXPECT_EQ(run_cli("calibrate --data /nonexistent.csv --out " + temp_path("r.json")).exit_code,
              3);

    // Unreachable quadrature tolerance -> numerical error (4).
    const std::string hard_cfg = temp_path("hard.cfg");
    write_file(hard_cfg,
               "model = gbm\ngbm.p0 = 42.77\ngbm.sigma = 0.5\n"
               "quad.abs_tol = 1e-18\nquad.max_subdivisions = 0\n");
    EXPECT_EQ(run_cli("price --config " + hard_cfg).exit_code, 4);

    // CLI usage error -> 2.
    EXPECT_EQ(run_cli("price").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
}

TEST(CliProcess, CalibrateWritesReport) {
    const relopt::PriceSeries series = testsup::synth_seasonal_ou_series(
        testsup::pun2016_seasonality(), testsup::kPunLambda, testsup::kPunOuSigma, 0.0,
        {2016, 1, 1, 0}, 8784, 41);
    const std::string csv = temp_path("synth.csv");
    std::ofstream out(csv);
    out << "timestamp,price\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        out << relopt::format_timestamp(series.timestamps[i]) << ","
            << std::to_string(series.prices[i]) << "\n";
    out.close();

    const std::string report = temp_path("report.json");
    const RunOutcome res = run_cli("calibrate --data " + csv + " --out " + report);
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("ou lambda"), std::string::npos);

    const std::string json = read_file(report);
    EXPECT_NE(json.find("\"seasonality\""), std::string::npos);
    EXPECT_NE(json.find("\"ou\""), std::string::npos);
    EXPECT_NE(json.find("\"lambda\""), std::string::npos);
    EXPECT_NE(json.find("\"gbm\""), std::string::npos);
    EXPECT_NE(json.find("\"intercept\""), std::string::npos);
}

TEST(CliProcess, SweepWritesCsvDeterministically) {
    const std::string cfg = temp_path("sweep.cfg");
    write_file(cfg, ou_config_text());
    const std::string grid1 = temp_path("grid1.csv");
    const std::string grid2 = temp_path("grid2.csv");

    const std::string axes = " --axis contract.strike:20:60:4 --axis ou.sigma:1:13:4";
    ASSERT_EQ(run_cli("sweep --config " + cfg + axes + " --out " + grid1 + " --threads 2")
                  .exit_code,
              0);
    ASSERT_EQ(run_cli("sweep --config " + cfg + axes + " --out " + grid2).exit_code, 0);
    const std::string a = read_file(grid1);
    EXPECT_EQ(a, read_file(grid2));
    EXPECT_EQ(a.substr(0, a.find('\n')), "contract.strike,ou.sigma,value");
    EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 17);  // header + 16 rows

    // Axis violating an invariant fails before evaluation with exit 2.
    EXPECT_EQ(run_cli("sweep --config " + cfg + " --axis ou.lambda:-1:5:3 --out " + grid1)
                  .exit_code,
              2);
}

TEST(CliProcess, BoundsCommand) {
    const std::string cfg = temp_path("bounds.cfg");
    write_file(cfg, ou_config_text());
    const RunOutcome res = run_cli("bounds --config " + cfg);
    ASSERT_EQ(res.exit_code, 0) << res.output;
    EXPECT_NE(res.output.find("\"lower\""), std::string::npos);
    EXPECT_NE(res.output.find("\"upper\""), std::string::npos);
    EXPECT_NE(res.output.find("\"f_p\""), std::string::npos);
}
