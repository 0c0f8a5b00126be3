#include "relopt/json_io.hpp"

#include <json.hpp>

namespace relopt {

namespace {

using nlohmann::json;

json coefficients_json(const RegressionReport& report) {
    const auto estimates = to_coeff_vector(report.params);
    const auto errors = to_coeff_vector(report.standard_errors);
    const auto& names = seasonality_coeff_names();
    json coeffs = json::object();
    for (std::size_t i = 0; i < names.size(); ++i)
        coeffs[names[i]] = {{"estimate", estimates[i]}, {"std_error", errors[i]}};
    return coeffs;
}

json regression_json(const RegressionReport& report) {
    return {{"coefficients", coefficients_json(report)},
            {"r_squared", report.r_squared},
            {"n_observations", report.n_observations}};
}

} // namespace

std::string regression_report_json(const RegressionReport& report) {
    return regression_json(report).dump(2) + "\n";
}

std::string calibration_report_json(const CalibrationReport& report) {
    json doc = {{"seasonality", regression_json(report.seasonality)},
                {"ou",
                 {{"lambda", report.ou.lambda_hat},
                  {"sigma", report.ou.sigma_hat},
                  {"a", report.ou.ar_coefficient},
                  {"sd", report.ou.residual_sd}}},
                {"gbm", {{"sigma", report.gbm_sigma}}},
                {"warnings", report.warnings}};
    return doc.dump(2) + "\n";
}

std::string pricing_result_json(const PricingResult& result) {
    json doc = {{"value", result.value},
                {"method", result.method == PricingMethod::ClosedForm ? "closed_form"
                                                                      : "monte_carlo"},
                {"bounds", {{"lower", result.bounds.lower}, {"upper", result.bounds.upper}}},
                {"within_bounds", result.within_bounds}};
    if (result.std_error) doc["std_error"] = *result.std_error;
    return doc.dump(2) + "\n";
}

std::string bounds_json(const Bounds& bounds, double f_p, std::optional<double> f_k) {
    json doc = {{"lower", bounds.lower}, {"upper", bounds.upper}, {"f_p", f_p}};
    if (f_k) doc["f_k"] = *f_k;
    return doc.dump(2) + "\n";
}

} // namespace relopt
