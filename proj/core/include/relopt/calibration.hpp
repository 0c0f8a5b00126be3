#pragma once

#include <span>
#include <string>
#include <vector>

#include "relopt/price_series.hpp"
#include "relopt/seasonality.hpp"

namespace relopt {

/// AR(1)-based estimate of the deseasonalized log-price OU dynamics.
struct OuEstimate {
    double lambda_hat = 0.0;   // per year
    double sigma_hat = 0.0;    // per sqrt(year)
    double ar_coefficient = 0.0;  // per-step decay a = e^{-lambda dt}
    double residual_sd = 0.0;     // innovation standard deviation, per step
};

/// Annualized volatility from raw log returns: sample std / sqrt(dt).
/// Throws InputError for non-positive prices or fewer than 2 observations.
double estimate_gbm_sigma(const PriceSeries& series, double dt);

/// Exact-discretization AR(1) regression through the origin on the
/// deseasonalized log series: X_{t+1} = a X_t + eps. lambda = -ln(a)/dt,
/// sigma = sd(eps) * sqrt(-2 ln a / ((1 - a^2) dt)). Throws CalibrationError
/// ("no mean reversion detected") when a falls outside (0,1) or the
/// residuals are numerically zero.
OuEstimate estimate_ou(std::span<const double> deseasonalized, double dt);

struct CalibrationReport {
    RegressionReport seasonality;
    OuEstimate ou;
    double gbm_sigma = 0.0;
    std::vector<std::string> warnings;
};

/// Full pipeline: seasonality OLS on log prices, OU estimation on its
/// residuals, GBM volatility on raw log returns. Hourly steps are mapped to
/// years as dt = 1/8760. Adds a warning when the AR(1) coefficient leaves
/// the (0.9, 1.0) corridor expected of hourly power data.
CalibrationReport calibrate_pipeline(const PriceSeries& series);

} // namespace relopt
