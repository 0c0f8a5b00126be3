// ro — reliability option pricing toolkit.
//
// Subcommands: calibrate (seasonality + dynamics from hourly spot CSV),
// price (closed form or Monte Carlo, with no-arbitrage bounds), bounds,
// and sweep (1- or 2-axis parameter grids to CSV).

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "relopt/calibration.hpp"
#include "relopt/closed_form.hpp"
#include "relopt/csv.hpp"
#include "relopt/errors.hpp"
#include "relopt/json_io.hpp"
#include "relopt/monte_carlo.hpp"
#include "relopt/run_config.hpp"
#include "relopt/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw relopt::InputError("cannot open '" + path + "' for writing");
    out << text;
}

void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (out_path)
        write_text(*out_path, text);
    else
        std::cout << text;
}

int cmd_calibrate(const std::string& data_path, const std::string& out_path) {
    const relopt::PriceSeries series = relopt::read_price_csv(data_path);
    const relopt::CalibrationReport report = relopt::calibrate_pipeline(series);
    write_text(out_path, relopt::calibration_report_json(report));

    std::printf("calibrated %zu hourly observations\n", series.size());
    std::printf("  %-28s %12s\n", "parameter", "estimate");
    std::printf("  %-28s %12.4f\n", "seasonality intercept", report.seasonality.params.alpha);
    std::printf("  %-28s %12.4f\n", "seasonality R^2", report.seasonality.r_squared);
    std::printf("  %-28s %12.4f\n", "ou lambda (1/yr)", report.ou.lambda_hat);
    std::printf("  %-28s %12.4f\n", "ou sigma (1/sqrt(yr))", report.ou.sigma_hat);
    std::printf("  %-28s %12.6f\n", "ou AR(1) coefficient", report.ou.ar_coefficient);
    std::printf("  %-28s %12.4f\n", "gbm sigma (1/sqrt(yr))", report.gbm_sigma);
    for (const auto& w : report.warnings) std::printf("warning: %s\n", w.c_str());
    std::printf("report written to %s\n", out_path.c_str());
    return 0;
}

int cmd_price(const std::string& config_path, const std::string& method_text,
              std::optional<std::uint64_t> seed, unsigned threads,
              const std::optional<std::string>& out_path) {
    relopt::RunConfig cfg = relopt::load_run_config(config_path);
    if (seed) cfg.mc.seed = *seed;
    const relopt::MethodChoice method = method_text.empty()
                                            ? relopt::MethodChoice::Auto
                                            : relopt::parse_method(method_text);
    const relopt::PricingResult result = relopt::price_run(cfg, method, threads);
    emit(out_path, relopt::pricing_result_json(result));
    return 0;
}

int cmd_bounds(const std::string& config_path, const std::optional<std::string>& out_path) {
    const relopt::RunConfig cfg = relopt::load_run_config(config_path);
    const relopt::Bounds b = relopt::bounds_for(cfg.model_spec, cfg.contract, cfg.quad);
    const double f_p = relopt::swap_forward(cfg.model_spec, cfg.contract, cfg.quad);
    std::optional<double> f_k;
    if (!cfg.contract.has_fixed_strike())
        f_k = relopt::swap_forward_strike(cfg.model_spec, cfg.contract, cfg.quad);
    emit(out_path, relopt::bounds_json(b, f_p, f_k));
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::vector<std::string>& axis_texts,
              const std::string& out_path, const std::string& method_text, unsigned threads) {
    const relopt::RunConfig cfg = relopt::load_run_config(config_path);
    relopt::SweepSpec spec;
    for (const auto& text : axis_texts) spec.axes.push_back(relopt::parse_axis(text));
    const relopt::MethodChoice method = method_text.empty()
                                            ? relopt::MethodChoice::Auto
                                            : relopt::parse_method(method_text);
    const relopt::SweepGrid grid = relopt::run_sweep(cfg, spec, method, threads);
    std::ofstream out(out_path);
    if (!out) throw relopt::InputError("cannot open '" + out_path + "' for writing");
    relopt::write_sweep_csv(grid, out);
    std::printf("wrote %zu grid values to %s\n", grid.values.size(), out_path.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reliability option pricing for electricity markets"};
    app.require_subcommand(1);

    std::string data_path, config_path, out_file, method_text;
    std::optional<std::string> opt_out;
    std::vector<std::string> axis_texts;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;

    auto* calibrate = app.add_subcommand("calibrate", "Fit seasonality and dynamics from CSV");
    calibrate->add_option("--data", data_path, "Input CSV (timestamp,price)")->required();
    calibrate->add_option("--out", out_file, "Output JSON report")->required();

    auto* price = app.add_subcommand("price", "Price a reliability option");
    price->add_option("--config", config_path, "Run configuration file")->required();
    price->add_option("--method", method_text, "cf (closed form) or mc (Monte Carlo)");
    price->add_option("--seed", seed, "Override mc.seed");
    price->add_option("--threads", threads, "Monte Carlo worker threads");
    price->add_option("--out", opt_out, "Write JSON here instead of stdout");

    auto* bounds = app.add_subcommand("bounds", "Model-free no-arbitrage bounds");
    bounds->add_option("--config", config_path, "Run configuration file")->required();
    bounds->add_option("--out", opt_out, "Write JSON here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "Evaluate a 1- or 2-axis parameter grid");
    sweep->add_option("--config", config_path, "Run configuration file")->required();
    sweep->add_option("--axis", axis_texts, "key:min:max:n[:log] (repeat for a second axis)")
        ->required();
    sweep->add_option("--out", out_file, "Output CSV")->required();
    sweep->add_option("--method", method_text, "cf or mc");
    sweep->add_option("--threads", threads, "Worker threads across grid points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (calibrate->parsed()) return cmd_calibrate(data_path, out_file);
        if (price->parsed()) return cmd_price(config_path, method_text, seed, threads, opt_out);
        if (bounds->parsed()) return cmd_bounds(config_path, opt_out);
        if (sweep->parsed()) return cmd_sweep(config_path, axis_texts, out_file, method_text, threads);
    } catch (const relopt::ParameterError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const relopt::NumericalError& e) {
        std::fprintf(stderr, "error: %s (best estimate %.6f)\n", e.what(), e.best_estimate());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return 0;
}
