#include "relopt/models.hpp"

#include <cmath>
#include <string>

#include "relopt/errors.hpp"

namespace relopt {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw ParameterError(msg);
}

} // namespace

void validate(const GbmParams& p) {
    require(p.p0 > 0.0, "gbm: p0 must be positive");
    require(p.sigma >= 0.0, "gbm: sigma must be >= 0");
    require(std::isfinite(p.q), "gbm: q must be finite");
}

void validate(const TwoGbmParams& p) {
    require(p.p0 > 0.0 && p.k0 > 0.0, "two_gbm: p0 and k0 must be positive");
    require(p.sigma_p >= 0.0 && p.sigma_k >= 0.0, "two_gbm: volatilities must be >= 0");
    require(std::fabs(p.rho) <= 1.0, "two_gbm: rho must lie in [-1,1]");
    require(std::isfinite(p.q_p) && std::isfinite(p.q_k), "two_gbm: drifts must be finite");
}

void validate(const OuParams& p) {
    require(p.lambda > 0.0, "ou: lambda must be positive");
    require(p.sigma >= 0.0, "ou: sigma must be >= 0");
    require(std::isfinite(p.x0) && std::isfinite(p.mu_slope), "ou: x0 and mu_slope must be finite");
    validate(p.seasonality);
    validate_civil(p.anchor);
}

void validate(const TwoOuParams& p) {
    validate(p.p);
    validate(p.k);
    require(std::fabs(p.rho) <= 1.0, "two_ou: rho must lie in [-1,1]");
}

void validate(const ShiftedTwoOuParams& p) {
    validate(p.base);
    require(p.p_floor >= 0.0 && p.k_floor >= 0.0, "shifted_two_ou: floors must be >= 0");
}

void validate(const ModelSpec& m) {
    std::visit([](const auto& p) { validate(p); }, m);
}

const char* model_tag(const ModelSpec& m) {
    struct Tag {
        const char* operator()(const GbmParams&) const { return "gbm"; }
        const char* operator()(const TwoGbmParams&) const { return "two_gbm"; }
        const char* operator()(const OuParams&) const { return "ou"; }
        const char* operator()(const TwoOuParams&) const { return "two_ou"; }
        const char* operator()(const ShiftedTwoOuParams&) const { return "shifted_two_ou"; }
    };
    return std::visit(Tag{}, m);
}

bool needs_fixed_strike(const ModelSpec& m) {
    return std::holds_alternative<GbmParams>(m) || std::holds_alternative<OuParams>(m);
}

void validate_pairing(const ModelSpec& model, const RoContract& contract) {
    validate(model);
    validate(contract);
    if (needs_fixed_strike(model) && !contract.has_fixed_strike())
        throw ParameterError(std::string(model_tag(model)) +
                             " prices a fixed strike; set contract.strike");
    if (!needs_fixed_strike(model) && contract.has_fixed_strike())
        throw ParameterError(std::string(model_tag(model)) +
                             " carries its own strike dynamics; remove contract.strike");
}

// ---------------------------------------------------------------------------
// OU transitions
// ---------------------------------------------------------------------------

double ou_var(double lambda, double sigma, double t) {
    return sigma * sigma * (-std::expm1(-2.0 * lambda * t)) / (2.0 * lambda);
}

double ou_step_sd(double dt, double lambda, double sigma) {
    return std::sqrt(ou_var(lambda, sigma, dt));
}

double ou_exact_step(double x, double dt, double lambda, double sigma, double z) {
    if (!(lambda > 0.0))
        throw ParameterError("ou_exact_step: lambda must be positive (use the gbm model instead)");
    if (!(dt > 0.0)) throw ParameterError("ou_exact_step: dt must be positive");
    return x * std::exp(-lambda * dt) + ou_step_sd(dt, lambda, sigma) * z;
}

double two_ou_step_correlation(double dt, double lambda_x, double lambda_y, double rho) {
    if (rho == 0.0) return 0.0;
    const double cross = -std::expm1(-(lambda_x + lambda_y) * dt) / (lambda_x + lambda_y);
    const double vx = -std::expm1(-2.0 * lambda_x * dt) / (2.0 * lambda_x);
    const double vy = -std::expm1(-2.0 * lambda_y * dt) / (2.0 * lambda_y);
    const double r = rho * cross / std::sqrt(vx * vy);
    return std::fmin(1.0, std::fmax(-1.0, r));
}

// ---------------------------------------------------------------------------
// Forward curves
// ---------------------------------------------------------------------------

double ou_mu(const OuParams& p, double t) {
    double mu = p.mu_slope * t;
    if (p.seasonality.is_flat()) return p.seasonality.alpha + mu;
    const auto hour = static_cast<std::int64_t>(std::floor(t * kHoursPerYear + 1e-9));
    return mu + seasonal_value(p.seasonality, calendar_point(add_hours(p.anchor, hour)));
}

double forward_ou(const OuParams& p, double t) {
    if (t == 0.0) return std::exp(ou_mu(p, 0.0) + p.x0);
    return std::exp(ou_mu(p, t) + p.x0 * std::exp(-p.lambda * t) +
                    0.5 * ou_var(p.lambda, p.sigma, t));
}

QuadratureConfig resolve_quadrature(const QuadratureConfig& quad, const RoContract& contract) {
    QuadratureConfig out = quad;
    if (out.abs_tol <= 0.0) out.abs_tol = 1e-6 * contract.q * (contract.t2 - contract.t1);
    return out;
}

double integrate_price_window(const std::function<double(double)>& integrand,
                              const RoContract& contract, const QuadratureConfig& quad,
                              bool hourly_cells) {
    const QuadratureConfig cfg = resolve_quadrature(quad, contract);
    const double t1 = contract.t1;
    const double t2 = contract.t2;
    if (!hourly_cells) return integrate_window(integrand, t1, t2, cfg);

    // The seasonal curve is piecewise constant per hour, so the integrand is
    // smooth inside hourly cells and may jump at their edges. Integrate cell
    // by cell with the tolerance shared proportionally to width.
    const double window = t2 - t1;
    const double edge_eps = 1e-12 * std::fmax(1.0, t2);
    auto first_cell = static_cast<std::int64_t>(std::ceil(t1 * kHoursPerYear - 1e-9));
    auto last_cell = static_cast<std::int64_t>(std::floor(t2 * kHoursPerYear + 1e-9));

    // Evaluations are clamped just inside each cell so the endpoints pick up
    // the cell's own seasonal level, not the neighbour's. The pad exceeds the
    // hour-indexing nudge in ou_mu; the induced integration error is O(1e-12).
    const double pad = 1e-8 / kHoursPerYear;

    double total = 0.0;
    double a = t1;
    for (std::int64_t k = first_cell; k <= last_cell + 1; ++k) {
        const double b = k <= last_cell ? static_cast<double>(k) / kHoursPerYear : t2;
        if (b - a <= edge_eps) {
            a = b;
            continue;
        }
        QuadratureConfig cell_cfg = cfg;
        cell_cfg.abs_tol = cfg.abs_tol * (b - a) / window;
        const double lo = a + pad;
        const double hi = b - pad;
        auto cell_f = [&](double t) { return integrand(std::fmin(std::fmax(t, lo), hi)); };
        total += integrate_window(cell_f, a, b, cell_cfg);
        a = b;
    }
    return total;
}

namespace {

double forward_leg_integral(const std::function<double(double)>& discounted_forward,
                            const RoContract& contract, const QuadratureConfig& quad,
                            bool cells) {
    return integrate_price_window(discounted_forward, contract, quad, cells);
}

} // namespace

double swap_forward(const ModelSpec& model, const RoContract& contract,
                    const QuadratureConfig& quad) {
    validate(model);
    validate(contract);
    struct Fp {
        const RoContract& c;
        const QuadratureConfig& quad;

        double operator()(const GbmParams& p) const {
            return forward_leg_integral([&](double t) { return p.p0 * std::exp(-p.q * t); }, c,
                                        quad, false);
        }
        double operator()(const TwoGbmParams& p) const {
            return forward_leg_integral([&](double t) { return p.p0 * std::exp(-p.q_p * t); }, c,
                                        quad, false);
        }
        double operator()(const OuParams& p) const {
            return forward_leg_integral(
                [&](double t) { return std::exp(-c.r * t) * forward_ou(p, t); }, c, quad,
                !p.seasonality.is_flat());
        }
        double operator()(const TwoOuParams& p) const { return (*this)(p.p); }
        double operator()(const ShiftedTwoOuParams& p) const {
            return (*this)(p.base.p) - p.p_floor * discount_annuity(c.r, c.t1, c.t2);
        }
    };
    return std::visit(Fp{contract, quad}, model);
}

double swap_forward_strike(const ModelSpec& model, const RoContract& contract,
                           const QuadratureConfig& quad) {
    validate(model);
    validate(contract);
    struct Fk {
        const RoContract& c;
        const QuadratureConfig& quad;

        [[noreturn]] double operator()(const GbmParams&) const {
            throw ParameterError("gbm has a fixed strike, not a strike forward");
        }
        [[noreturn]] double operator()(const OuParams&) const {
            throw ParameterError("ou has a fixed strike, not a strike forward");
        }
        double operator()(const TwoGbmParams& p) const {
            return forward_leg_integral([&](double t) { return p.k0 * std::exp(-p.q_k * t); }, c,
                                        quad, false);
        }
        double operator()(const TwoOuParams& p) const {
            return forward_leg_integral(
                [&](double t) { return std::exp(-c.r * t) * forward_ou(p.k, t); }, c, quad,
                !p.k.seasonality.is_flat());
        }
        double operator()(const ShiftedTwoOuParams& p) const {
            return (*this)(p.base) - p.k_floor * discount_annuity(c.r, c.t1, c.t2);
        }
    };
    return std::visit(Fk{contract, quad}, model);
}

} // namespace relopt
