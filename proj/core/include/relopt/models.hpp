#pragma once

#include <variant>

#include "relopt/calendar.hpp"
#include "relopt/contract.hpp"
#include "relopt/quadrature.hpp"
#include "relopt/seasonality.hpp"

namespace relopt {

/// Lognormal spot with risk-neutral drift r - q: dP = (r - q) P dt + sigma P dB.
struct GbmParams {
    double p0;           // spot at valuation, EUR/MWh
    double sigma;        // per sqrt(year)
    double q = 0.0;      // dividend-style drift adjustment, per year

    friend bool operator==(const GbmParams&, const GbmParams&) = default;
};

/// Spot and strike as correlated lognormals with their own drift adjustments.
struct TwoGbmParams {
    double p0;
    double k0;
    double sigma_p;
    double sigma_k;
    double q_p = 0.0;
    double q_k = 0.0;
    double rho = 0.0;

    friend bool operator==(const TwoGbmParams&, const TwoGbmParams&) = default;
};

/// Seasonal exponential OU: P_t = exp(mu(t) + X_t), dX = -lambda X dt + sigma dW.
/// mu(t) = seasonal_value(seasonality, anchor + t) + mu_slope * t, with model
/// time mapped to the calendar as 1 year = 8760 hours from the anchor.
struct OuParams {
    double x0 = 0.0;
    double lambda;       // mean-reversion speed, per year, > 0
    double sigma;        // per sqrt(year)
    SeasonalityParams seasonality{};
    double mu_slope = 0.0;              // optional linear log-drift term
    CivilDateTime anchor{2016, 1, 1, 0};  // calendar position of t = 0

    friend bool operator==(const OuParams&, const OuParams&) = default;
};

/// Correlated seasonal OU legs for spot (p) and strike (k).
struct TwoOuParams {
    OuParams p;
    OuParams k;
    double rho = 0.0;

    friend bool operator==(const TwoOuParams&, const TwoOuParams&) = default;
};

/// Two-OU dynamics shifted down by constant floors: spot = exp-leg - p_floor,
/// strike = exp-leg - k_floor, so prices may go negative down to the floor.
struct ShiftedTwoOuParams {
    TwoOuParams base;
    double p_floor = 0.0;  // P* >= 0
    double k_floor = 0.0;  // K* >= 0

    /// The fixed strike C = P* - K* of the equivalent spread option.
    double spread_strike() const { return p_floor - k_floor; }

    friend bool operator==(const ShiftedTwoOuParams&, const ShiftedTwoOuParams&) = default;
};

using ModelSpec = std::variant<GbmParams, TwoGbmParams, OuParams, TwoOuParams, ShiftedTwoOuParams>;

void validate(const GbmParams&);
void validate(const TwoGbmParams&);
void validate(const OuParams&);
void validate(const TwoOuParams&);
void validate(const ShiftedTwoOuParams&);
void validate(const ModelSpec&);

const char* model_tag(const ModelSpec&);

/// True when the model prices against a fixed contract strike (GBM, one-OU);
/// the other models carry their own strike dynamics.
bool needs_fixed_strike(const ModelSpec&);

/// Throws ParameterError when the contract's strike kind does not match the
/// model (e.g. a stochastic-strike contract under plain GBM).
void validate_pairing(const ModelSpec& model, const RoContract& contract);

// ---------------------------------------------------------------------------
// OU transition machinery (exact for any step size)
// ---------------------------------------------------------------------------

/// Conditional standard deviation of X_{t+dt} given X_t:
/// sigma * sqrt((1 - e^{-2 lambda dt}) / (2 lambda)).
double ou_step_sd(double dt, double lambda, double sigma);

/// One exact OU transition: x e^{-lambda dt} + ou_step_sd * z.
/// Throws ParameterError for lambda <= 0 (use the GBM model instead).
double ou_exact_step(double x, double dt, double lambda, double sigma, double z);

/// Correlation of the exact increments of two OU legs over a step of length
/// dt when their Brownian drivers have correlation rho. Equals rho when the
/// mean-reversion speeds coincide and tends to rho as dt -> 0.
double two_ou_step_correlation(double dt, double lambda_x, double lambda_y, double rho);

// ---------------------------------------------------------------------------
// Forward curves
// ---------------------------------------------------------------------------

/// mu(t) for the OU leg: seasonal dummies at the anchor-mapped calendar hour
/// plus the linear term.
double ou_mu(const OuParams& p, double t);

/// Conditional expected spot f(0,t) = exp(mu(t) + x0 e^{-lambda t} + Var(t)/2)
/// with Var(t) = sigma^2 (1 - e^{-2 lambda t}) / (2 lambda).
double forward_ou(const OuParams& p, double t);

/// Conditional variance of X_t given X_0.
double ou_var(double lambda, double sigma, double t);

/// Discounted flow-forward F_P(0; t1, t2) of the model's spot leg:
/// integral of e^{-rt} E[P_t] dt over the contract window.
double swap_forward(const ModelSpec& model, const RoContract& contract,
                    const QuadratureConfig& quad = {});

/// Same for the strike leg of stochastic-strike models. Throws
/// ParameterError for fixed-strike models (use the contract strike there).
double swap_forward_strike(const ModelSpec& model, const RoContract& contract,
                           const QuadratureConfig& quad = {});

/// Resolves abs_tol = 0 to the default 1e-6 * Q * (t2 - t1).
QuadratureConfig resolve_quadrature(const QuadratureConfig& quad, const RoContract& contract);

/// Integrates an integrand that is smooth except for jumps at hour-grid
/// points of the seasonal curve: splits the window into hourly cells when
/// `hourly_cells` is set, otherwise defers to integrate_window directly.
/// Shared by the closed-form prices and the forwards.
double integrate_price_window(const std::function<double(double)>& integrand,
                              const RoContract& contract, const QuadratureConfig& quad,
                              bool hourly_cells);

constexpr double kHoursPerYear = 8760.0;

} // namespace relopt
