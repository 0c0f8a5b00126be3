#include "relopt/closed_form.hpp"

#include <cmath>

#include "relopt/distributions.hpp"
#include "relopt/errors.hpp"

namespace relopt {

namespace {

constexpr double kVarFloor = 1e-24;  // below this the lognormal degenerates

double bounds_slack(const RoContract& c, const QuadratureConfig& quad) {
    return 2.0 * resolve_quadrature(quad, c).abs_tol;
}

PricingResult assemble(double value, const ModelSpec& model, const RoContract& c,
                       const QuadratureConfig& quad) {
    PricingResult res;
    res.value = value;
    res.method = PricingMethod::ClosedForm;
    res.bounds = bounds_for(model, c, quad);
    res.within_bounds = check_within_bounds(value, res.bounds, bounds_slack(c, quad));
    return res;
}

} // namespace

double combined_sigma(double sigma_p, double sigma_k, double rho) {
    const double v = sigma_k * sigma_k + sigma_p * sigma_p - 2.0 * rho * sigma_k * sigma_p;
    return std::sqrt(std::fmax(v, 0.0));
}

double bs_call(double p0, double k, double r, double sigma, double t, double q) {
    if (!(t > 0.0)) throw ParameterError("bs_call: t must be positive");
    if (!(p0 > 0.0)) throw ParameterError("bs_call: p0 must be positive");
    if (!(k >= 0.0)) throw ParameterError("bs_call: strike must be >= 0");
    const double fwd = p0 * std::exp(-q * t);
    const double disc_k = k * std::exp(-r * t);
    if (k == 0.0) return fwd;
    const double s = sigma * std::sqrt(t);
    if (s * s < kVarFloor) return std::fmax(fwd - disc_k, 0.0);
    const double d1 = (std::log(p0 / k) + (r - q + 0.5 * sigma * sigma) * t) / s;
    const double d2 = d1 - s;
    return fwd * norm_cdf(d1) - disc_k * norm_cdf(d2);
}

double bs_put(double p0, double k, double r, double sigma, double t, double q) {
    if (!(t > 0.0)) throw ParameterError("bs_put: t must be positive");
    if (!(p0 > 0.0)) throw ParameterError("bs_put: p0 must be positive");
    if (!(k >= 0.0)) throw ParameterError("bs_put: strike must be >= 0");
    if (k == 0.0) return 0.0;
    const double fwd = p0 * std::exp(-q * t);
    const double disc_k = k * std::exp(-r * t);
    const double s = sigma * std::sqrt(t);
    if (s * s < kVarFloor) return std::fmax(disc_k - fwd, 0.0);
    const double d1 = (std::log(p0 / k) + (r - q + 0.5 * sigma * sigma) * t) / s;
    const double d2 = d1 - s;
    return disc_k * norm_cdf(-d2) - fwd * norm_cdf(-d1);
}

double margrabe(double p0, double k0, double q_p, double q_k, double sigma_combined, double t) {
    if (!(t > 0.0)) throw ParameterError("margrabe: t must be positive");
    if (!(p0 > 0.0 && k0 > 0.0)) throw ParameterError("margrabe: p0 and k0 must be positive");
    const double fp = p0 * std::exp(-q_p * t);
    const double fk = k0 * std::exp(-q_k * t);
    const double s = sigma_combined * std::sqrt(t);
    if (s * s < kVarFloor) return std::fmax(fp - fk, 0.0);
    const double a1 = (std::log(p0 / k0) + (q_k - q_p) * t) / s + 0.5 * s;
    const double a2 = a1 - s;
    return fp * norm_cdf(a1) - fk * norm_cdf(a2);
}

double margrabe_put(double p0, double k0, double q_p, double q_k, double sigma_combined,
                    double t) {
    if (!(t > 0.0)) throw ParameterError("margrabe_put: t must be positive");
    if (!(p0 > 0.0 && k0 > 0.0)) throw ParameterError("margrabe_put: p0 and k0 must be positive");
    const double fp = p0 * std::exp(-q_p * t);
    const double fk = k0 * std::exp(-q_k * t);
    const double s = sigma_combined * std::sqrt(t);
    if (s * s < kVarFloor) return std::fmax(fk - fp, 0.0);
    const double a1 = (std::log(p0 / k0) + (q_k - q_p) * t) / s + 0.5 * s;
    const double a2 = a1 - s;
    return fk * norm_cdf(-a2) - fp * norm_cdf(-a1);
}

double exchange_forward_value(double f, double k, double var) {
    if (k <= 0.0) return f;
    if (var < kVarFloor) return std::fmax(f - k, 0.0);
    const double s = std::sqrt(var);
    const double d_plus = std::log(f / k) / s + 0.5 * s;
    return f * norm_cdf(d_plus) - k * norm_cdf(d_plus - s);
}

double exchange_forward_put(double f, double k, double var) {
    if (k <= 0.0) return 0.0;
    if (var < kVarFloor) return std::fmax(k - f, 0.0);
    const double s = std::sqrt(var);
    const double d_plus = std::log(f / k) / s + 0.5 * s;
    return k * norm_cdf(-(d_plus - s)) - f * norm_cdf(-d_plus);
}

double two_ou_ratio_var(const TwoOuParams& p, double t) {
    const double cross =
        2.0 * p.rho * p.p.sigma * p.k.sigma *
        (-std::expm1(-(p.p.lambda + p.k.lambda) * t)) / (p.p.lambda + p.k.lambda);
    const double v = ou_var(p.p.lambda, p.p.sigma, t) + ou_var(p.k.lambda, p.k.sigma, t) - cross;
    return std::fmax(v, 0.0);
}

// ---------------------------------------------------------------------------
// Window prices
// ---------------------------------------------------------------------------

PricingResult price_ro_gbm(const GbmParams& p, const RoContract& c, const QuadratureConfig& quad) {
    validate_pairing(ModelSpec{p}, c);
    const double k = *c.fixed_strike;
    const double value = c.q * integrate_price_window(
                                   [&](double t) { return bs_call(p.p0, k, c.r, p.sigma, t, p.q); },
                                   c, quad, false);
    return assemble(value, ModelSpec{p}, c, quad);
}

PricingResult price_ro_two_gbm(const TwoGbmParams& p, const RoContract& c,
                               const QuadratureConfig& quad) {
    validate_pairing(ModelSpec{p}, c);
    const double s = combined_sigma(p.sigma_p, p.sigma_k, p.rho);
    const double value = c.q * integrate_price_window(
                                   [&](double t) {
                                       return margrabe(p.p0, p.k0, p.q_p, p.q_k, s, t);
                                   },
                                   c, quad, false);
    return assemble(value, ModelSpec{p}, c, quad);
}

PricingResult price_ro_ou(const OuParams& p, const RoContract& c, const QuadratureConfig& quad) {
    validate_pairing(ModelSpec{p}, c);
    const double k = *c.fixed_strike;
    const bool cells = !p.seasonality.is_flat();
    const double value =
        c.q * integrate_price_window(
                  [&](double t) {
                      return std::exp(-c.r * t) *
                             exchange_forward_value(forward_ou(p, t), k,
                                                    ou_var(p.lambda, p.sigma, t));
                  },
                  c, quad, cells);
    return assemble(value, ModelSpec{p}, c, quad);
}

PricingResult price_ro_two_ou(const TwoOuParams& p, const RoContract& c,
                              const QuadratureConfig& quad) {
    validate_pairing(ModelSpec{p}, c);
    const bool cells = !p.p.seasonality.is_flat() || !p.k.seasonality.is_flat();
    const double value =
        c.q * integrate_price_window(
                  [&](double t) {
                      return std::exp(-c.r * t) *
                             exchange_forward_value(forward_ou(p.p, t), forward_ou(p.k, t),
                                                    two_ou_ratio_var(p, t));
                  },
                  c, quad, cells);
    return assemble(value, ModelSpec{p}, c, quad);
}

PricingResult price_closed_form(const ModelSpec& model, const RoContract& c,
                                const QuadratureConfig& quad) {
    struct Dispatch {
        const RoContract& c;
        const QuadratureConfig& quad;

        PricingResult operator()(const GbmParams& p) const { return price_ro_gbm(p, c, quad); }
        PricingResult operator()(const TwoGbmParams& p) const {
            return price_ro_two_gbm(p, c, quad);
        }
        PricingResult operator()(const OuParams& p) const { return price_ro_ou(p, c, quad); }
        PricingResult operator()(const TwoOuParams& p) const {
            return price_ro_two_ou(p, c, quad);
        }
        [[noreturn]] PricingResult operator()(const ShiftedTwoOuParams&) const {
            throw ParameterError("shifted_two_ou: no closed form; use Monte Carlo");
        }
    };
    return std::visit(Dispatch{c, quad}, model);
}

double price_put_integral(const ModelSpec& model, const RoContract& c,
                          const QuadratureConfig& quad) {
    validate_pairing(model, c);
    struct Dispatch {
        const RoContract& c;
        const QuadratureConfig& quad;

        double operator()(const GbmParams& p) const {
            const double k = *c.fixed_strike;
            return c.q * integrate_price_window(
                             [&](double t) { return bs_put(p.p0, k, c.r, p.sigma, t, p.q); }, c,
                             quad, false);
        }
        double operator()(const TwoGbmParams& p) const {
            const double s = combined_sigma(p.sigma_p, p.sigma_k, p.rho);
            return c.q * integrate_price_window(
                             [&](double t) {
                                 return margrabe_put(p.p0, p.k0, p.q_p, p.q_k, s, t);
                             },
                             c, quad, false);
        }
        double operator()(const OuParams& p) const {
            const double k = *c.fixed_strike;
            return c.q * integrate_price_window(
                             [&](double t) {
                                 return std::exp(-c.r * t) *
                                        exchange_forward_put(forward_ou(p, t), k,
                                                             ou_var(p.lambda, p.sigma, t));
                             },
                             c, quad, !p.seasonality.is_flat());
        }
        double operator()(const TwoOuParams& p) const {
            const bool cells = !p.p.seasonality.is_flat() || !p.k.seasonality.is_flat();
            return c.q *
                   integrate_price_window(
                       [&](double t) {
                           return std::exp(-c.r * t) *
                                  exchange_forward_put(forward_ou(p.p, t), forward_ou(p.k, t),
                                                       two_ou_ratio_var(p, t));
                       },
                       c, quad, cells);
        }
        [[noreturn]] double operator()(const ShiftedTwoOuParams&) const {
            throw ParameterError("shifted_two_ou: no closed form; use Monte Carlo");
        }
    };
    return std::visit(Dispatch{c, quad}, model);
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

Bounds na_bounds(const RoContract& c, double f_p, double f_k_or_strike, double p_floor) {
    validate(c);
    if (!std::isfinite(f_p) || !std::isfinite(f_k_or_strike))
        throw ParameterError("na_bounds: forwards must be finite");
    const double ann = discount_annuity(c.r, c.t1, c.t2);
    Bounds b;
    if (c.has_fixed_strike())
        b.lower = c.q * std::fmax(f_p - f_k_or_strike * ann, 0.0);
    else
        b.lower = c.q * std::fmax(f_p - f_k_or_strike, 0.0);
    b.upper = c.q * f_p + c.q * p_floor * ann;
    return b;
}

Bounds bounds_for(const ModelSpec& model, const RoContract& c, const QuadratureConfig& quad) {
    validate_pairing(model, c);
    const double f_p = swap_forward(model, c, quad);
    const double f_k_or_strike =
        c.has_fixed_strike() ? *c.fixed_strike : swap_forward_strike(model, c, quad);
    double p_floor = 0.0;
    if (const auto* shifted = std::get_if<ShiftedTwoOuParams>(&model)) p_floor = shifted->p_floor;
    return na_bounds(c, f_p, f_k_or_strike, p_floor);
}

bool check_within_bounds(double value, const Bounds& b, double slack) {
    return value >= b.lower - slack && value <= b.upper + slack;
}

} // namespace relopt
