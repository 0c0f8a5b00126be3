#include "relopt/monte_carlo.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "relopt/errors.hpp"
#include "relopt/rng.hpp"

namespace relopt {

double pairwise_sum(const double* data, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

namespace {

inline double pos(double x) { return x > 0.0 ? x : 0.0; }

/// Grid geometry and trapezoid weights (discount folded in), shared by all
/// kernels. Unit capacity; Q multiplies the final estimate.
struct PayoffGrid {
    double dt = 0.0;
    double t_first = 0.0;           // first grid point >= t1
    std::vector<double> times;      // payoff grid points
    std::vector<double> wdisc;      // trapezoid weight * e^{-r t}

    PayoffGrid(const RoContract& c, const McConfig& cfg) {
        if (cfg.n_paths < 2) throw ParameterError("mc: n_paths must be >= 2");
        if (cfg.steps_per_year < 1) throw ParameterError("mc: steps_per_year must be >= 1");
        const auto n_total = static_cast<std::int64_t>(
            std::ceil(c.t2 * static_cast<double>(cfg.steps_per_year) - 1e-9));
        dt = c.t2 / static_cast<double>(n_total);
        const auto j0 = static_cast<std::int64_t>(std::ceil(c.t1 / dt - 1e-9));
        const std::int64_t m = n_total - j0 + 1;
        if (m < 2)
            throw ParameterError("mc: grid has fewer than one step inside [t1,t2]; raise "
                                 "steps_per_year (got " +
                                 std::to_string(cfg.steps_per_year) + ")");
        times.resize(static_cast<std::size_t>(m));
        wdisc.resize(static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i) {
            const double t = static_cast<double>(j0 + i) * dt;
            times[static_cast<std::size_t>(i)] = t;
            const double w = (i == 0 || i == m - 1) ? 0.5 * dt : dt;
            wdisc[static_cast<std::size_t>(i)] = w * std::exp(-c.r * t);
        }
        t_first = times.front();
    }

    std::size_t size() const { return times.size(); }
};

// Each kernel simulates one trajectory with exact transitions: a single
// composite step from t = 0 to the first payoff point, then uniform steps.
// `sign` implements antithetic flips; `put` swaps the payoff legs.

struct GbmKernel {
    std::vector<double> drift;  // log p0 + (r - q - sigma^2/2) t_i
    double s_first, s_step, strike;
    const PayoffGrid& grid;

    GbmKernel(const GbmParams& p, const RoContract& c, const PayoffGrid& g) : grid(g) {
        const double mu = c.r - p.q - 0.5 * p.sigma * p.sigma;
        drift.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            drift[i] = std::log(p.p0) + mu * g.times[i];
        s_first = p.sigma * std::sqrt(g.t_first);
        s_step = p.sigma * std::sqrt(g.dt);
        strike = *c.fixed_strike;
    }

    double path_value(NormalStream& z, double sign, bool put) const {
        double w = s_first * (sign * z.next());
        double acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i > 0) w += s_step * (sign * z.next());
            const double diff = std::exp(drift[i] + w) - strike;
            acc += grid.wdisc[i] * pos(put ? -diff : diff);
        }
        return acc;
    }
};

struct TwoGbmKernel {
    std::vector<double> drift_p, drift_k;
    double sp_first, sk_first, sp_step, sk_step, rho, beta;
    const PayoffGrid& grid;

    TwoGbmKernel(const TwoGbmParams& p, const RoContract& c, const PayoffGrid& g) : grid(g) {
        drift_p.resize(g.size());
        drift_k.resize(g.size());
        const double mp = c.r - p.q_p - 0.5 * p.sigma_p * p.sigma_p;
        const double mk = c.r - p.q_k - 0.5 * p.sigma_k * p.sigma_k;
        for (std::size_t i = 0; i < g.size(); ++i) {
            drift_p[i] = std::log(p.p0) + mp * g.times[i];
            drift_k[i] = std::log(p.k0) + mk * g.times[i];
        }
        sp_first = p.sigma_p * std::sqrt(g.t_first);
        sk_first = p.sigma_k * std::sqrt(g.t_first);
        sp_step = p.sigma_p * std::sqrt(g.dt);
        sk_step = p.sigma_k * std::sqrt(g.dt);
        rho = p.rho;
        beta = std::sqrt(1.0 - p.rho * p.rho);
    }

    double path_value(NormalStream& z, double sign, bool put) const {
        double wp = 0.0, wk = 0.0, acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double z1 = sign * z.next();
            const double z2 = sign * z.next();
            const double w2 = rho * z1 + beta * z2;
            if (i == 0) {
                wp = sp_first * z1;
                wk = sk_first * w2;
            } else {
                wp += sp_step * z1;
                wk += sk_step * w2;
            }
            const double diff = std::exp(drift_p[i] + wp) - std::exp(drift_k[i] + wk);
            acc += grid.wdisc[i] * pos(put ? -diff : diff);
        }
        return acc;
    }
};

struct OuKernel {
    std::vector<double> expmu;
    double x0, a_first, s_first, a_step, s_step, strike;
    const PayoffGrid& grid;

    OuKernel(const OuParams& p, const RoContract& c, const PayoffGrid& g) : grid(g) {
        expmu.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) expmu[i] = std::exp(ou_mu(p, g.times[i]));
        x0 = p.x0;
        a_first = std::exp(-p.lambda * g.t_first);
        s_first = ou_step_sd(g.t_first, p.lambda, p.sigma);
        a_step = std::exp(-p.lambda * g.dt);
        s_step = ou_step_sd(g.dt, p.lambda, p.sigma);
        strike = *c.fixed_strike;
    }

    double path_value(NormalStream& z, double sign, bool put) const {
        double x = x0 * a_first + s_first * (sign * z.next());
        double acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (i > 0) x = a_step * x + s_step * (sign * z.next());
            const double diff = expmu[i] * std::exp(x) - strike;
            acc += grid.wdisc[i] * pos(put ? -diff : diff);
        }
        return acc;
    }
};

struct TwoOuKernel {
    std::vector<double> expmu, expnu;
    double x0, y0;
    double ax_first, ay_first, sx_first, sy_first, rho_first, beta_first;
    double ax_step, ay_step, sx_step, sy_step, rho_step, beta_step;
    double shift;  // spread strike C = P* - K*, 0 for the plain model
    const PayoffGrid& grid;

    TwoOuKernel(const TwoOuParams& p, double spread_strike, const RoContract& c,
                const PayoffGrid& g)
        : grid(g) {
        expmu.resize(g.size());
        expnu.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            expmu[i] = std::exp(ou_mu(p.p, g.times[i]));
            expnu[i] = std::exp(ou_mu(p.k, g.times[i]));
        }
        x0 = p.p.x0;
        y0 = p.k.x0;
        ax_first = std::exp(-p.p.lambda * g.t_first);
        ay_first = std::exp(-p.k.lambda * g.t_first);
        sx_first = ou_step_sd(g.t_first, p.p.lambda, p.p.sigma);
        sy_first = ou_step_sd(g.t_first, p.k.lambda, p.k.sigma);
        rho_first = two_ou_step_correlation(g.t_first, p.p.lambda, p.k.lambda, p.rho);
        beta_first = std::sqrt(1.0 - rho_first * rho_first);
        ax_step = std::exp(-p.p.lambda * g.dt);
        ay_step = std::exp(-p.k.lambda * g.dt);
        sx_step = ou_step_sd(g.dt, p.p.lambda, p.p.sigma);
        sy_step = ou_step_sd(g.dt, p.k.lambda, p.k.sigma);
        rho_step = two_ou_step_correlation(g.dt, p.p.lambda, p.k.lambda, p.rho);
        beta_step = std::sqrt(1.0 - rho_step * rho_step);
        shift = spread_strike;
    }

    double path_value(NormalStream& z, double sign, bool put) const {
        double x = 0.0, y = 0.0, acc = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double z1 = sign * z.next();
            const double z2 = sign * z.next();
            if (i == 0) {
                const double w2 = rho_first * z1 + beta_first * z2;
                x = x0 * ax_first + sx_first * z1;
                y = y0 * ay_first + sy_first * w2;
            } else {
                const double w2 = rho_step * z1 + beta_step * z2;
                x = ax_step * x + sx_step * z1;
                y = ay_step * y + sy_step * w2;
            }
            const double diff = expmu[i] * std::exp(x) - expnu[i] * std::exp(y) - shift;
            acc += grid.wdisc[i] * pos(put ? -diff : diff);
        }
        return acc;
    }
};

template <class Kernel>
void fill_payoffs(const Kernel& kern, const McConfig& cfg, bool put, std::vector<double>& out,
                  std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
        NormalStream z(derive_path_seed(cfg.seed, i));
        double v = kern.path_value(z, 1.0, put);
        if (cfg.antithetic) {
            NormalStream z2(derive_path_seed(cfg.seed, i));
            v = 0.5 * (v + kern.path_value(z2, -1.0, put));
        }
        out[i] = v;
    }
}

template <class Kernel>
McEstimate run_paths(const Kernel& kern, const RoContract& c, const McConfig& cfg, bool put,
                     unsigned n_workers) {
    std::vector<double> payoffs(cfg.n_paths);
    if (n_workers <= 1) {
        fill_payoffs(kern, cfg, put, payoffs, 0, cfg.n_paths);
    } else {
        const std::size_t chunk = (cfg.n_paths + n_workers - 1) / n_workers;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(n_workers);
        for (unsigned w = 0; w < n_workers; ++w) {
            const std::size_t begin = std::min<std::size_t>(w * chunk, cfg.n_paths);
            const std::size_t end = std::min<std::size_t>(begin + chunk, cfg.n_paths);
            pool.emplace_back([&, w, begin, end] {
                try {
                    fill_payoffs(kern, cfg, put, payoffs, begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    const auto n = static_cast<double>(cfg.n_paths);
    // A constant sample (deterministic model) has mean = the value and
    // sample std exactly 0; do not let pairwise-sum rounding leak in.
    bool constant = true;
    for (double v : payoffs) {
        if (v != payoffs.front()) {
            constant = false;
            break;
        }
    }
    const double mean =
        constant ? payoffs.front() : pairwise_sum(payoffs.data(), payoffs.size()) / n;
    double var = 0.0;
    if (!constant) {
        for (double& v : payoffs) {
            const double d = v - mean;
            v = d * d;
        }
        var = pairwise_sum(payoffs.data(), payoffs.size()) / (n - 1.0);
    }
    McEstimate est;
    est.value = c.q * mean;
    est.std_error = c.q * std::sqrt(var / n);
    est.n_paths = cfg.n_paths;
    return est;
}

McEstimate mc_dispatch(const ModelSpec& model, const RoContract& c, const McConfig& cfg, bool put,
                       unsigned n_workers) {
    validate_pairing(model, c);
    const PayoffGrid grid(c, cfg);
    struct V {
        const RoContract& c;
        const McConfig& cfg;
        const PayoffGrid& grid;
        bool put;
        unsigned workers;

        McEstimate operator()(const GbmParams& p) const {
            return run_paths(GbmKernel(p, c, grid), c, cfg, put, workers);
        }
        McEstimate operator()(const TwoGbmParams& p) const {
            return run_paths(TwoGbmKernel(p, c, grid), c, cfg, put, workers);
        }
        McEstimate operator()(const OuParams& p) const {
            return run_paths(OuKernel(p, c, grid), c, cfg, put, workers);
        }
        McEstimate operator()(const TwoOuParams& p) const {
            return run_paths(TwoOuKernel(p, 0.0, c, grid), c, cfg, put, workers);
        }
        McEstimate operator()(const ShiftedTwoOuParams& p) const {
            return run_paths(TwoOuKernel(p.base, p.spread_strike(), c, grid), c, cfg, put,
                             workers);
        }
    };
    return std::visit(V{c, cfg, grid, put, n_workers}, model);
}

} // namespace

McEstimate mc_price(const ModelSpec& model, const RoContract& contract, const McConfig& cfg,
                    unsigned n_workers) {
    return mc_dispatch(model, contract, cfg, /*put=*/false, n_workers);
}

McEstimate mc_price_shifted(const ShiftedTwoOuParams& params, const RoContract& contract,
                            const McConfig& cfg, unsigned n_workers) {
    return mc_price(ModelSpec{params}, contract, cfg, n_workers);
}

McEstimate mc_put_integral(const ModelSpec& model, const RoContract& contract,
                           const McConfig& cfg, unsigned n_workers) {
    return mc_dispatch(model, contract, cfg, /*put=*/true, n_workers);
}

PricingResult price_monte_carlo(const ModelSpec& model, const RoContract& contract,
                                const McConfig& cfg, const QuadratureConfig& quad,
                                unsigned n_workers) {
    const McEstimate est = mc_price(model, contract, cfg, n_workers);
    PricingResult res;
    res.value = est.value;
    res.method = PricingMethod::MonteCarlo;
    res.std_error = est.std_error;
    res.bounds = bounds_for(model, contract, quad);
    const double slack =
        2.0 * resolve_quadrature(quad, contract).abs_tol + 3.0 * est.std_error;
    res.within_bounds = check_within_bounds(est.value, res.bounds, slack);
    return res;
}

} // namespace relopt
