#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "relopt/calibration.hpp"
#include "relopt/errors.hpp"
#include "support.hpp"

using namespace relopt;

namespace {

constexpr double kHourDt = 1.0 / 8760.0;

PriceSeries constant_series(double level, std::size_t n) {
    PriceSeries s;
    for (std::size_t i = 0; i < n; ++i) {
        s.timestamps.push_back(add_hours({2016, 1, 1, 0}, static_cast<std::int64_t>(i)));
        s.prices.push_back(level);
    }
    return s;
}

} // namespace

TEST(GbmSigma, ConstantSeriesGivesZero) {
    EXPECT_EQ(estimate_gbm_sigma(constant_series(42.0, 100), kHourDt), 0.0);
}

TEST(GbmSigma, RecoversSyntheticVolatility) {
    const double sigma = 0.4;
    std::mt19937_64 gen(31);
    std::normal_distribution<double> normal;
    PriceSeries s;
    double logp = std::log(42.0);
    for (int i = 0; i < 8760; ++i) {
        s.timestamps.push_back(add_hours({2016, 1, 1, 0}, i));
        s.prices.push_back(std::exp(logp));
        logp += -0.5 * sigma * sigma * kHourDt + sigma * std::sqrt(kHourDt) * normal(gen);
    }
    const double hat = estimate_gbm_sigma(s, kHourDt);
    EXPECT_NEAR(hat, sigma, 0.05 * sigma);
}

TEST(GbmSigma, RejectsBadInput) {
    PriceSeries s = constant_series(42.0, 10);
    s.prices[3] = -1.0;
    EXPECT_THROW(estimate_gbm_sigma(s, kHourDt), InputError);
    EXPECT_THROW(estimate_gbm_sigma(constant_series(42.0, 1), kHourDt), InputError);
}

TEST(EstimateOu, NoiselessDecayRecoveredExactly) {
    const double lambda = 300.0;
    const double a = std::exp(-lambda * kHourDt);
    std::vector<double> x(1000);
    x[0] = 1.0;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = a * x[i - 1];
    const OuEstimate est = estimate_ou(x, kHourDt);
    EXPECT_NEAR(est.lambda_hat, 300.0, 1e-8);
    EXPECT_NEAR(est.sigma_hat, 0.0, 1e-8);
    EXPECT_NEAR(est.ar_coefficient, a, 1e-14);
}

TEST(EstimateOu, RecoversSyntheticParameters) {
    const double lambda = testsup::kPunLambda, sigma = testsup::kPunOuSigma;
    const double a = std::exp(-lambda * kHourDt);
    const double step_sd = sigma * std::sqrt((1.0 - a * a) / (2.0 * lambda));
    std::mt19937_64 gen(32);
    std::normal_distribution<double> normal;
    std::vector<double> x(8760);
    x[0] = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = a * x[i - 1] + step_sd * normal(gen);

    const OuEstimate est = estimate_ou(x, kHourDt);
    EXPECT_NEAR(est.lambda_hat, lambda, 0.10 * lambda);
    EXPECT_NEAR(est.sigma_hat, sigma, 0.02 * sigma);
}

TEST(EstimateOu, ScaleEquivariance) {
    std::mt19937_64 gen(33);
    std::normal_distribution<double> normal;
    std::vector<double> x(5000);
    const double a = 0.96;
    x[0] = 0.1;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = a * x[i - 1] + 0.05 * normal(gen);

    const OuEstimate base = estimate_ou(x, kHourDt);
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= 3.7;
    const OuEstimate big = estimate_ou(scaled, kHourDt);
    EXPECT_NEAR(big.lambda_hat, base.lambda_hat, 1e-9 * base.lambda_hat);
    EXPECT_NEAR(big.sigma_hat, 3.7 * base.sigma_hat, 1e-9 * base.sigma_hat);
}

TEST(EstimateOu, ReverseAndRestoreLeavesInputAndEstimateIntact) {
    std::mt19937_64 gen(34);
    std::normal_distribution<double> normal;
    std::vector<double> x(3000);
    x[0] = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = 0.95 * x[i - 1] + 0.1 * normal(gen);
    const std::vector<double> original = x;

    const OuEstimate first = estimate_ou(x, kHourDt);
    std::reverse(x.begin(), x.end());
    std::reverse(x.begin(), x.end());
    const OuEstimate second = estimate_ou(x, kHourDt);
    EXPECT_EQ(x, original);
    EXPECT_EQ(first.lambda_hat, second.lambda_hat);
    EXPECT_EQ(first.sigma_hat, second.sigma_hat);
}

TEST(EstimateOu, SubsamplingByTwoIsStable) {
    const double lambda = 150.0, sigma = 3.0;
    const double a = std::exp(-lambda * kHourDt);
    const double step_sd = sigma * std::sqrt((1.0 - a * a) / (2.0 * lambda));
    std::mt19937_64 gen(35);
    std::normal_distribution<double> normal;
    std::vector<double> x(17520);
    x[0] = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) x[i] = a * x[i - 1] + step_sd * normal(gen);

    std::vector<double> half;
    for (std::size_t i = 0; i < x.size(); i += 2) half.push_back(x[i]);

    const OuEstimate full = estimate_ou(x, kHourDt);
    const OuEstimate sub = estimate_ou(half, 2.0 * kHourDt);
    EXPECT_NEAR(full.lambda_hat, sub.lambda_hat, 0.15 * lambda);
    EXPECT_NEAR(full.sigma_hat, sub.sigma_hat, 0.05 * sigma);
}

TEST(EstimateOu, ErrorsOnNonReverting) {
    std::vector<double> trending(100);
    for (std::size_t i = 0; i < trending.size(); ++i)
        trending[i] = static_cast<double>(i + 1);
    EXPECT_THROW(estimate_ou(trending, kHourDt), CalibrationError);

    std::vector<double> alternating(100);
    for (std::size_t i = 0; i < alternating.size(); ++i)
        alternating[i] = (i % 2 == 0) ? 1.0 : -1.0;
    EXPECT_THROW(estimate_ou(alternating, kHourDt), CalibrationError);

    EXPECT_THROW(estimate_ou(std::vector<double>{1.0, 0.9}, kHourDt), InputError);
}

TEST(Pipeline, PureSeasonalSeriesHasNoMeanReversionSignal) {
    const SeasonalityParams season = testsup::pun2016_seasonality();
    PriceSeries s;
    for (int i = 0; i < 8784; ++i) {
        const CivilDateTime ts = add_hours({2016, 1, 1, 0}, i);
        s.timestamps.push_back(ts);
        s.prices.push_back(std::exp(seasonal_value(season, ts)));
    }
    try {
        calibrate_pipeline(s);
        FAIL() << "expected CalibrationError";
    } catch (const CalibrationError& e) {
        EXPECT_NE(std::string(e.what()).find("no mean reversion"), std::string::npos);
    }
}

TEST(Pipeline, JointRecoveryOnSyntheticYear) {
    const SeasonalityParams truth = testsup::pun2016_seasonality();
    const PriceSeries s = testsup::synth_seasonal_ou_series(
        truth, testsup::kPunLambda, testsup::kPunOuSigma, 0.0, {2016, 1, 1, 0}, 8784, 3);
    const CalibrationReport report = calibrate_pipeline(s);

    EXPECT_NEAR(report.ou.lambda_hat, testsup::kPunLambda, 0.10 * testsup::kPunLambda);
    EXPECT_NEAR(report.ou.sigma_hat, testsup::kPunOuSigma, 0.02 * testsup::kPunOuSigma);
    EXPECT_GT(report.gbm_sigma, 0.0);
    EXPECT_TRUE(report.warnings.empty())
        << (report.warnings.empty() ? "" : report.warnings.front());
    EXPECT_GT(report.ou.ar_coefficient, 0.9);
    EXPECT_LT(report.ou.ar_coefficient, 1.0);
}

TEST(Pipeline, WarnsOutsideHourlyCorridor) {
    // Very fast reversion drives the hourly AR(1) coefficient below 0.9.
    const SeasonalityParams truth = testsup::pun2016_seasonality();
    const PriceSeries s = testsup::synth_seasonal_ou_series(truth, 2000.0, 10.0, 0.0,
                                                            {2016, 1, 1, 0}, 8784, 37);
    const CalibrationReport report = calibrate_pipeline(s);
    ASSERT_FALSE(report.warnings.empty());
    EXPECT_NE(report.warnings.front().find("corridor"), std::string::npos);
}
