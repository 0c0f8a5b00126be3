#include "relopt/calibration.hpp"

#include <cmath>

#include "relopt/errors.hpp"
#include "relopt/models.hpp"

namespace relopt {

double estimate_gbm_sigma(const PriceSeries& series, double dt) {
    validate_series(series);
    if (series.size() < 2) throw InputError("gbm sigma needs at least 2 observations");
    if (!(dt > 0.0)) throw ParameterError("gbm sigma: dt must be positive");

    const std::size_t m = series.size() - 1;
    std::vector<double> ret(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(series.prices[i] > 0.0) || !(series.prices[i + 1] > 0.0))
            throw InputError("gbm sigma requires strictly positive prices");
        ret[i] = std::log(series.prices[i + 1] / series.prices[i]);
    }
    double mean = 0.0;
    for (double r : ret) mean += r;
    mean /= static_cast<double>(m);
    double ss = 0.0;
    for (double r : ret) ss += (r - mean) * (r - mean);
    const double sd = m > 1 ? std::sqrt(ss / static_cast<double>(m - 1)) : 0.0;
    return sd / std::sqrt(dt);
}

OuEstimate estimate_ou(std::span<const double> x, double dt) {
    if (x.size() < 3) throw InputError("ou estimation needs at least 3 observations");
    if (!(dt > 0.0)) throw ParameterError("ou estimation: dt must be positive");

    const std::size_t m = x.size() - 1;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * x[i + 1];
    }
    if (sxx / static_cast<double>(m) < 1e-16)
        throw CalibrationError("no mean reversion detected: deseasonalized series is "
                               "numerically zero");
    const double a = sxy / sxx;
    if (!(a > 0.0) || !(a < 1.0))
        throw CalibrationError("no mean reversion detected: AR(1) coefficient " +
                               std::to_string(a) + " outside (0,1)");

    double ss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = x[i + 1] - a * x[i];
        ss += e * e;
    }
    const double sd = std::sqrt(ss / static_cast<double>(m - 1));

    OuEstimate est;
    est.ar_coefficient = a;
    est.residual_sd = sd;
    est.lambda_hat = -std::log(a) / dt;
    est.sigma_hat = sd * std::sqrt(-2.0 * std::log(a) / ((1.0 - a * a) * dt));
    return est;
}

CalibrationReport calibrate_pipeline(const PriceSeries& series) {
    constexpr double dt = 1.0 / kHoursPerYear;

    CalibrationReport report;
    report.seasonality = fit_seasonality(series);
    report.ou = estimate_ou(report.seasonality.residuals, dt);
    report.gbm_sigma = estimate_gbm_sigma(series, dt);

    const double a = report.ou.ar_coefficient;
    if (a <= 0.9 || a >= 1.0)
        report.warnings.push_back(
            "AR(1) coefficient " + std::to_string(a) +
            " is outside the (0.9, 1.0) corridor typical of hourly power data");
    return report;
}

} // namespace relopt
