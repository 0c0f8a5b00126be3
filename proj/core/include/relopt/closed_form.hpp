#pragma once

#include <optional>

#include "relopt/contract.hpp"
#include "relopt/models.hpp"
#include "relopt/quadrature.hpp"

namespace relopt {

enum class PricingMethod { ClosedForm, MonteCarlo };

struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct PricingResult {
    double value = 0.0;  // EUR
    PricingMethod method = PricingMethod::ClosedForm;
    std::optional<double> std_error;  // EUR, Monte Carlo only
    Bounds bounds;
    bool within_bounds = false;
};

// ---------------------------------------------------------------------------
// Per-maturity option values
// ---------------------------------------------------------------------------

/// Black-Scholes call on a lognormal spot with drift r - q. k = 0 returns
/// the pure-forward value p0 e^{-q t}; sigma = 0 returns the discounted
/// intrinsic (p0 e^{-q t} - k e^{-r t})^+. Throws ParameterError for t <= 0.
double bs_call(double p0, double k, double r, double sigma, double t, double q = 0.0);

/// Companion put under the same conventions (used by the parity identity).
double bs_put(double p0, double k, double r, double sigma, double t, double q = 0.0);

/// Exchange option on two lognormal legs with drift adjustments q_p, q_k and
/// combined volatility sigma_combined = sqrt(sk^2 + sp^2 - 2 rho sk sp):
/// p0 e^{-q_p t} N(a1) - k0 e^{-q_k t} N(a2). sigma_combined = 0 returns the
/// deterministic intrinsic. Throws ParameterError for t <= 0.
double margrabe(double p0, double k0, double q_p, double q_k, double sigma_combined, double t);

double margrabe_put(double p0, double k0, double q_p, double q_k, double sigma_combined,
                    double t);

double combined_sigma(double sigma_p, double sigma_k, double rho);

/// Undiscounted forward-measure exchange value f N(d+) - k N(d-) with
/// d(+/-) = log(f/k)/sqrt(var) +/- sqrt(var)/2, extended continuously to
/// (f - k)^+ as var -> 0 and to f at k = 0.
double exchange_forward_value(double f, double k, double var);

double exchange_forward_put(double f, double k, double var);

/// Integrated squared volatility of the ratio of the two OU-driven forwards.
double two_ou_ratio_var(const TwoOuParams& p, double t);

// ---------------------------------------------------------------------------
// Reliability-option prices (quadrature over the delivery window)
// ---------------------------------------------------------------------------

PricingResult price_ro_gbm(const GbmParams& p, const RoContract& c,
                           const QuadratureConfig& quad = {});
PricingResult price_ro_two_gbm(const TwoGbmParams& p, const RoContract& c,
                               const QuadratureConfig& quad = {});
PricingResult price_ro_ou(const OuParams& p, const RoContract& c,
                          const QuadratureConfig& quad = {});
PricingResult price_ro_two_ou(const TwoOuParams& p, const RoContract& c,
                              const QuadratureConfig& quad = {});

/// Dispatches on the model tag. Throws ParameterError with "no closed form;
/// use Monte Carlo" for the shifted model.
PricingResult price_closed_form(const ModelSpec& model, const RoContract& c,
                                const QuadratureConfig& quad = {});

/// The companion put-style integral Q * int e^{-rt} E[(K_t - P_t)^+] dt,
/// computed with the same quadrature machinery. Together with the call this
/// satisfies RO/Q - put/Q = F_P - F_K.
double price_put_integral(const ModelSpec& model, const RoContract& c,
                          const QuadratureConfig& quad = {});

// ---------------------------------------------------------------------------
// Model-free no-arbitrage bounds
// ---------------------------------------------------------------------------

/// Bounds from the window forwards. For a fixed-strike contract
/// `f_k_or_strike` is the strike level K and the lower bound is
/// Q (F_P - K * annuity)^+; for a stochastic strike it is the strike forward
/// F_K and the lower bound is Q (F_P - F_K)^+. The upper bound is
/// Q F_P + Q P* annuity in both cases.
Bounds na_bounds(const RoContract& c, double f_p, double f_k_or_strike, double p_floor);

/// Computes the model-consistent forwards and floor, then na_bounds.
Bounds bounds_for(const ModelSpec& model, const RoContract& c,
                  const QuadratureConfig& quad = {});

/// Containment check used for PricingResult.within_bounds: closed-form
/// values get a slack of ~2x the quadrature tolerance; Monte Carlo values
/// additionally get 3 standard errors of slack on each side.
bool check_within_bounds(double value, const Bounds& b, double slack);

} // namespace relopt
