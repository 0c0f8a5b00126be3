#pragma once

#include <string>

#include "relopt/calibration.hpp"
#include "relopt/closed_form.hpp"
#include "relopt/monte_carlo.hpp"
#include "relopt/seasonality.hpp"

namespace relopt {

/// JSON rendering of the library's report types (two-space indent, keys in
/// deterministic order).
std::string regression_report_json(const RegressionReport& report);
std::string calibration_report_json(const CalibrationReport& report);
std::string pricing_result_json(const PricingResult& result);
std::string bounds_json(const Bounds& bounds, double f_p, std::optional<double> f_k);

} // namespace relopt
