#include "relopt/seasonality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "relopt/errors.hpp"

namespace relopt {

bool SeasonalityParams::is_flat() const {
    auto all_zero = [](const auto& a) {
        return std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; });
    };
    return all_zero(month) && all_zero(day) && all_zero(hour);
}

void validate(const SeasonalityParams& p) {
    if (p.month[0] != 0.0)
        throw ParameterError("seasonality: January is the base month, its coefficient must be 0");
    if (p.day[static_cast<int>(DayCategory::Friday)] != 0.0)
        throw ParameterError("seasonality: Friday is the base day category, its coefficient must be 0");
    if (p.hour[0] != 0.0)
        throw ParameterError("seasonality: hour 1 is the base hour, its coefficient must be 0");
}

double seasonal_value(const SeasonalityParams& p, const CalendarPoint& point) {
    return p.alpha + p.month[static_cast<std::size_t>(point.month - 1)] +
           p.day[static_cast<std::size_t>(point.day_category)] +
           p.hour[static_cast<std::size_t>(point.hour - 1)];
}

double seasonal_value(const SeasonalityParams& p, const CivilDateTime& t) {
    return seasonal_value(p, calendar_point(t));
}

const std::vector<std::string>& seasonality_coeff_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        n.emplace_back("intercept");
        for (int m = 2; m <= 12; ++m) n.push_back("month_" + std::to_string(m));
        n.emplace_back("weekend");
        n.emplace_back("monday");
        n.emplace_back("working_day");
        for (int h = 2; h <= 24; ++h) n.push_back("hour_" + std::to_string(h));
        return n;
    }();
    return names;
}

std::vector<double> to_coeff_vector(const SeasonalityParams& p) {
    std::vector<double> v;
    v.reserve(kSeasonalityCoeffCount);
    v.push_back(p.alpha);
    for (int m = 2; m <= 12; ++m) v.push_back(p.month[static_cast<std::size_t>(m - 1)]);
    v.push_back(p.day[static_cast<int>(DayCategory::Weekend)]);
    v.push_back(p.day[static_cast<int>(DayCategory::Monday)]);
    v.push_back(p.day[static_cast<int>(DayCategory::OtherWorking)]);
    for (int h = 2; h <= 24; ++h) v.push_back(p.hour[static_cast<std::size_t>(h - 1)]);
    return v;
}

SeasonalityParams from_coeff_vector(const std::vector<double>& coeffs) {
    if (coeffs.size() != kSeasonalityCoeffCount)
        throw ParameterError("seasonality coefficient vector has wrong length");
    SeasonalityParams p;
    std::size_t i = 0;
    p.alpha = coeffs[i++];
    for (int m = 2; m <= 12; ++m) p.month[static_cast<std::size_t>(m - 1)] = coeffs[i++];
    p.day[static_cast<int>(DayCategory::Weekend)] = coeffs[i++];
    p.day[static_cast<int>(DayCategory::Monday)] = coeffs[i++];
    p.day[static_cast<int>(DayCategory::OtherWorking)] = coeffs[i++];
    for (int h = 2; h <= 24; ++h) p.hour[static_cast<std::size_t>(h - 1)] = coeffs[i++];
    return p;
}

namespace detail {

OlsResult ols_fit(const std::vector<std::vector<double>>& rows, const std::vector<double>& y) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n == 0) throw InputError("regression sample is empty");
    const auto p = static_cast<Eigen::Index>(rows.front().size());
    if (n <= p)
        throw InputError("regression needs more observations than coefficients (" +
                         std::to_string(n) + " <= " + std::to_string(p) + ")");

    Eigen::MatrixXd X(n, p);
    Eigen::VectorXd Y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < p; ++j) X(i, j) = r[static_cast<std::size_t>(j)];
        Y(i) = y[static_cast<std::size_t>(i)];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(1e-10);
    if (qr.rank() < p)
        throw CalibrationError("regression design matrix is rank deficient");

    Eigen::VectorXd beta = qr.solve(Y);
    Eigen::VectorXd resid = Y - X * beta;

    const double rss = resid.squaredNorm();
    const double mean_y = Y.mean();
    const double tss = (Y.array() - mean_y).matrix().squaredNorm();
    const double s2 = rss / static_cast<double>(n - p);

    // (X'X)^-1 = P R^-1 R^-T P' from the pivoted QR factor.
    Eigen::MatrixXd R = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    Eigen::MatrixXd Rinv =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    Eigen::MatrixXd xtx_inv_perm = Rinv * Rinv.transpose();
    Eigen::MatrixXd xtx_inv =
        qr.colsPermutation() * xtx_inv_perm * qr.colsPermutation().transpose();

    OlsResult out;
    out.coefficients.assign(beta.data(), beta.data() + p);
    out.standard_errors.resize(static_cast<std::size_t>(p));
    for (Eigen::Index j = 0; j < p; ++j)
        out.standard_errors[static_cast<std::size_t>(j)] = std::sqrt(s2 * xtx_inv(j, j));
    out.residuals.assign(resid.data(), resid.data() + n);
    out.r_squared = tss > 0.0 ? 1.0 - rss / tss : 1.0;
    return out;
}

} // namespace detail

namespace {

std::vector<double> design_row(const CalendarPoint& pt) {
    std::vector<double> row(kSeasonalityCoeffCount, 0.0);
    std::size_t i = 0;
    row[i++] = 1.0;
    for (int m = 2; m <= 12; ++m) row[i++] = pt.month == m ? 1.0 : 0.0;
    row[i++] = pt.day_category == DayCategory::Weekend ? 1.0 : 0.0;
    row[i++] = pt.day_category == DayCategory::Monday ? 1.0 : 0.0;
    row[i++] = pt.day_category == DayCategory::OtherWorking ? 1.0 : 0.0;
    for (int h = 2; h <= 24; ++h) row[i++] = pt.hour == h ? 1.0 : 0.0;
    return row;
}

} // namespace

RegressionReport fit_seasonality(const PriceSeries& series) {
    validate_series(series);
    const std::size_t n = series.size();
    if (n <= 41)
        throw InputError("seasonality fit needs more than 41 observations, got " +
                         std::to_string(n));

    std::array<bool, 12> month_seen{};
    std::array<bool, kDayCategoryCount> day_seen{};
    std::array<bool, 24> hour_seen{};

    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    std::vector<double> logp(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(series.prices[i] > 0.0))
            throw InputError("seasonality fit requires strictly positive prices; row " +
                             std::to_string(i + 1) + " has " + std::to_string(series.prices[i]));
        logp[i] = std::log(series.prices[i]);
        const CalendarPoint pt = calendar_point(series.timestamps[i]);
        month_seen[static_cast<std::size_t>(pt.month - 1)] = true;
        day_seen[static_cast<std::size_t>(pt.day_category)] = true;
        hour_seen[static_cast<std::size_t>(pt.hour - 1)] = true;
        rows.push_back(design_row(pt));
    }

    // With drop-one encoding any absent category makes the design singular;
    // report which one instead of a bare rank error.
    for (int m = 1; m <= 12; ++m)
        if (!month_seen[static_cast<std::size_t>(m - 1)])
            throw CalibrationError("cannot fit seasonality: month_" + std::to_string(m) +
                                   " never occurs in the sample");
    for (int d = 0; d < kDayCategoryCount; ++d)
        if (!day_seen[static_cast<std::size_t>(d)])
            throw CalibrationError(std::string("cannot fit seasonality: day category '") +
                                   day_category_name(static_cast<DayCategory>(d)) +
                                   "' never occurs in the sample");
    for (int h = 1; h <= 24; ++h)
        if (!hour_seen[static_cast<std::size_t>(h - 1)])
            throw CalibrationError("cannot fit seasonality: hour_" + std::to_string(h) +
                                   " never occurs in the sample");

    detail::OlsResult ols = detail::ols_fit(rows, logp);

    RegressionReport report;
    report.params = from_coeff_vector(ols.coefficients);
    report.standard_errors = from_coeff_vector(ols.standard_errors);
    report.residuals = std::move(ols.residuals);
    report.r_squared = ols.r_squared;
    report.n_observations = n;
    return report;
}


} // namespace relopt
