#pragma once

#include <array>
#include <string>
#include <vector>

#include "relopt/calendar.hpp"
#include "relopt/price_series.hpp"

namespace relopt {

/// Additive log-price seasonality: an intercept plus month, day-category and
/// hour-of-day dummy effects. January, Friday and hour 1 are the base
/// categories and their coefficients are pinned to zero.
struct SeasonalityParams {
    double alpha = 0.0;
    std::array<double, 12> month{};            // month[0] = January, base
    std::array<double, kDayCategoryCount> day{};  // day[Friday] base
    std::array<double, 24> hour{};             // hour[0] = hour 1, base

    /// True when every dummy coefficient is zero, i.e. the curve is the
    /// constant alpha.
    bool is_flat() const;

    friend bool operator==(const SeasonalityParams&, const SeasonalityParams&) = default;
};

/// Throws ParameterError if a base-category coefficient is nonzero.
void validate(const SeasonalityParams& p);

/// alpha + beta_month + delta_day + gamma_hour at the given point.
double seasonal_value(const SeasonalityParams& p, const CalendarPoint& point);

/// Convenience overload evaluating at a timestamp.
double seasonal_value(const SeasonalityParams& p, const CivilDateTime& t);

/// Number of regression coefficients (intercept + non-base dummies).
inline constexpr int kSeasonalityCoeffCount = 1 + 11 + 3 + 23;

/// Canonical coefficient names in regression order: "intercept",
/// "month_2".."month_12", "weekend", "monday", "working_day",
/// "hour_2".."hour_24".
const std::vector<std::string>& seasonality_coeff_names();

/// Flattens params into the regression coefficient vector (base categories
/// dropped) and back.
std::vector<double> to_coeff_vector(const SeasonalityParams& p);
SeasonalityParams from_coeff_vector(const std::vector<double>& coeffs);

/// Output of the seasonality regression on log prices.
struct RegressionReport {
    SeasonalityParams params;
    SeasonalityParams standard_errors;  // same shape, bases zero
    std::vector<double> residuals;      // log P_t - fitted, one per observation
    double r_squared = 0.0;
    std::size_t n_observations = 0;
};

/// Ordinary least squares of log prices on the dummy design. Throws
/// InputError for non-positive prices or too-short samples, and
/// CalibrationError naming the missing category when some month, day
/// category or hour never occurs in the sample.
RegressionReport fit_seasonality(const PriceSeries& series);

namespace detail {

/// Plain OLS with intercept: solves min ||y - X b|| by Householder QR and
/// returns coefficients, iid standard errors, residuals and R^2. Exposed for
/// property tests; fit_seasonality builds the design and delegates here.
struct OlsResult {
    std::vector<double> coefficients;
    std::vector<double> standard_errors;
    std::vector<double> residuals;
    double r_squared = 0.0;
};

OlsResult ols_fit(const std::vector<std::vector<double>>& rows, const std::vector<double>& y);

} // namespace detail

} // namespace relopt
