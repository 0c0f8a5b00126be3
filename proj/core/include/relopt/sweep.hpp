#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "relopt/run_config.hpp"

namespace relopt {

enum class MethodChoice {
    Auto,        // closed form when the model has one, Monte Carlo otherwise
    ClosedForm,  // error for the shifted model
    MonteCarlo,
};

MethodChoice parse_method(const std::string& text);  // "cf" | "mc"

/// Prices one config under the chosen method, bounds attached.
PricingResult price_run(const RunConfig& cfg, MethodChoice method, unsigned n_workers = 1);

struct SweepAxis {
    std::string key;  // a config key, e.g. "ou.sigma" or "contract.strike"
    double min = 0.0;
    double max = 0.0;
    std::size_t n_points = 2;
    bool log_scale = false;
};

/// Parses "key:min:max:n[:log]".
SweepAxis parse_axis(const std::string& text);

struct SweepSpec {
    std::vector<SweepAxis> axes;  // 1 or 2
};

struct SweepGrid {
    std::vector<std::string> axis_names;
    std::vector<std::vector<double>> axis_values;  // one vector per axis
    std::vector<double> values;                    // row-major, first axis outer
    std::vector<Bounds> bounds;                    // per grid point

    std::size_t index(std::size_t i, std::size_t j = 0) const {
        return axis_values.size() == 1 ? i : i * axis_values[1].size() + j;
    }
};

/// Evaluates the pricing over the grid. All grid configs are built and
/// validated up front, so an axis that violates a model invariant fails
/// before any pricing runs. Evaluation may be parallel; output order is
/// row-major regardless.
SweepGrid run_sweep(const RunConfig& base, const SweepSpec& spec,
                    MethodChoice method = MethodChoice::Auto, unsigned n_workers = 1);

/// Long-format CSV: one header line with the axis keys plus "value", then
/// one row per grid point.
void write_sweep_csv(const SweepGrid& grid, std::ostream& out);

} // namespace relopt
