// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately avoid the library's pricing path: the Black-Scholes
// oracle integrates the terminal lognormal density with Gauss-Legendre
// nodes, and the exchange-option oracle is a plain two-asset Monte Carlo on
// std::mt19937_64 draws.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "relopt/calendar.hpp"
#include "relopt/models.hpp"
#include "relopt/price_series.hpp"
#include "relopt/seasonality.hpp"

namespace testsup {

// ---------------------------------------------------------------------------
// 2016 Italian PUN calibration fixture
// ---------------------------------------------------------------------------

inline relopt::SeasonalityParams pun2016_seasonality() {
    using relopt::DayCategory;
    relopt::SeasonalityParams s;
    s.alpha = 3.79;
    const double months[13] = {0, 0,     -0.22, -0.27, -0.36, -0.28, -0.23,
                               -0.07, -0.21, -0.07, 0.14,  0.23,  0.21};
    for (int m = 2; m <= 12; ++m) s.month[m - 1] = months[m];
    s.day[static_cast<int>(DayCategory::Monday)] = -0.01;
    s.day[static_cast<int>(DayCategory::Weekend)] = -0.14;
    s.day[static_cast<int>(DayCategory::OtherWorking)] = 0.02;
    const double hours[25] = {0,     0,    -0.08, -0.15, -0.18, -0.18, -0.13, -0.01, 0.1,
                              0.18,  0.16, 0.12,  0.07,  0.0,   -0.05, -0.02, 0.04,  0.09,
                              0.15,  0.22, 0.28,  0.27,  0.2,   0.12,  0.03};
    for (int h = 2; h <= 24; ++h) s.hour[h - 1] = hours[h];
    return s;
}

constexpr double kPunLambda = 294.84;   // per year
constexpr double kPunOuSigma = 6.5932;  // per sqrt(year)
constexpr double kPunGbmSigma = 5.4041;
constexpr double kPunMeanPrice = 42.77;

inline relopt::OuParams pun2016_ou(double x0 = 0.0) {
    relopt::OuParams p;
    p.x0 = x0;
    p.lambda = kPunLambda;
    p.sigma = kPunOuSigma;
    p.seasonality = pun2016_seasonality();
    p.anchor = relopt::CivilDateTime{2017, 1, 1, 0};
    return p;
}

inline relopt::TwoOuParams pun2016_two_ou(double rho = 0.5, double y0 = -0.21) {
    relopt::TwoOuParams p;
    p.p = pun2016_ou(0.0);
    p.k = pun2016_ou(y0);
    p.rho = rho;
    return p;
}

// ---------------------------------------------------------------------------
// Synthetic data
// ---------------------------------------------------------------------------

/// Minimal platform-stable normal source (SplitMix-style state walk plus
/// Box-Muller), so fixed-seed synthetic datasets do not depend on the
/// standard library's normal_distribution algorithm.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : state_(seed) {}

    double uniform() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(uniform()));
        const double angle = 6.283185307179586 * uniform();
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Hourly series P_t = exp(mu(t) + X_t) with X an exact-transition OU path,
/// generated with library-independent arithmetic.
inline relopt::PriceSeries synth_seasonal_ou_series(const relopt::SeasonalityParams& season,
                                                    double lambda, double sigma, double x0,
                                                    relopt::CivilDateTime start,
                                                    std::size_t n_hours, std::uint64_t seed) {
    const double dt = 1.0 / 8760.0;
    const double decay = std::exp(-lambda * dt);
    const double step_sd = sigma * std::sqrt((1.0 - decay * decay) / (2.0 * lambda));

    TestRng gen(seed);

    relopt::PriceSeries series;
    series.timestamps.reserve(n_hours);
    series.prices.reserve(n_hours);
    double x = x0;
    for (std::size_t i = 0; i < n_hours; ++i) {
        const relopt::CivilDateTime ts = relopt::add_hours(start, static_cast<std::int64_t>(i));
        series.timestamps.push_back(ts);
        series.prices.push_back(std::exp(relopt::seasonal_value(season, ts) + x));
        x = decay * x + step_sd * gen.normal();
    }
    return series;
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// 64-point Gauss-Legendre on [a,b].
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
    static const double x[32] = {
        0.0243502926634244, 0.0729931217877990, 0.1214628192961206, 0.1696444204239928,
        0.2174236437400071, 0.2646871622087674, 0.3113228719902110, 0.3572201583376681,
        0.4022701579639916, 0.4463660172534641, 0.4894031457070530, 0.5312794640198946,
        0.5718956462026340, 0.6111553551723933, 0.6489654712546573, 0.6852363130542333,
        0.7198818501716109, 0.7528199072605319, 0.7839723589433414, 0.8132653151227975,
        0.8406292962525803, 0.8659993981540928, 0.8893154459951141, 0.9105221370785028,
        0.9295691721319396, 0.9464113748584028, 0.9610087996520538, 0.9733268277899110,
        0.9833362538846260, 0.9910133714767443, 0.9963401167719553, 0.9993050417357722};
    static const double w[32] = {
        0.0486909570091397, 0.0485754674415034, 0.0483447622348030, 0.0479993885964583,
        0.0475401657148303, 0.0469681828162100, 0.0462847965813144, 0.0454916279274181,
        0.0445905581637566, 0.0435837245293235, 0.0424735151236536, 0.0412625632426235,
        0.0399537411327203, 0.0385501531786156, 0.0370551285402400, 0.0354722132568824,
        0.0338051618371416, 0.0320579283548516, 0.0302346570724025, 0.0283396726142595,
        0.0263774697150547, 0.0243527025687109, 0.0222701738083833, 0.0201348231535302,
        0.0179517157756973, 0.0157260304760247, 0.0134630478967186, 0.0111681394601311,
        0.0088467598263639, 0.0065044579689784, 0.0041470332605625, 0.0017832807216964};
    const double c = 0.5 * (b - a);
    const double m = 0.5 * (a + b);
    double s = 0.0;
    for (int i = 0; i < 32; ++i) s += w[i] * (f(m - c * x[i]) + f(m + c * x[i]));
    return c * s;
}

/// Call value by quadrature of the terminal lognormal density (split at the
/// payoff kink). Never touches the library's normal CDF or d1/d2.
inline double bs_call_density_oracle(double p0, double k, double r, double sigma, double t,
                                     double q = 0.0) {
    auto phi = [](double z) { return 0.3989422804014327 * std::exp(-0.5 * z * z); };
    auto f = [&](double z) {
        const double pt = p0 * std::exp((r - q - 0.5 * sigma * sigma) * t + sigma * std::sqrt(t) * z);
        return (pt > k ? pt - k : 0.0) * phi(z);
    };
    double kink = (std::log(k / p0) - (r - q - 0.5 * sigma * sigma) * t) / (sigma * std::sqrt(t));
    kink = std::fmin(12.0, std::fmax(-12.0, kink));
    return std::exp(-r * t) * (gauss_legendre(f, -12.0, kink) + gauss_legendre(f, kink, 12.0));
}

struct MeanAndError {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Plain Monte Carlo of E[(P_T - K_T)^+] on two correlated GBM terminals.
inline MeanAndError exchange_mc_oracle(double p0, double k0, double r, double q_p, double q_k,
                                       double sigma_p, double sigma_k, double rho, double t,
                                       std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double mp = (r - q_p - 0.5 * sigma_p * sigma_p) * t;
    const double mk = (r - q_k - 0.5 * sigma_k * sigma_k) * t;
    const double sp = sigma_p * std::sqrt(t);
    const double sk = sigma_k * std::sqrt(t);
    const double beta = std::sqrt(1.0 - rho * rho);
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z1 = normal(gen);
        const double z2 = rho * z1 + beta * normal(gen);
        const double pt = p0 * std::exp(mp + sp * z1);
        const double kt = k0 * std::exp(mk + sk * z2);
        const double pay = std::exp(-r * t) * std::fmax(pt - kt, 0.0);
        sum += pay;
        sumsq += pay * pay;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = (sumsq / static_cast<double>(n) - mean * mean) /
                       static_cast<double>(n - 1);
    return {mean, std::sqrt(std::fmax(var, 0.0))};
}

inline MeanAndError sample_mean(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(v.size() - 1) /
                            static_cast<double>(v.size()))};
}

} // namespace testsup
