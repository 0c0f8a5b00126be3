#pragma once

#include <cstddef>
#include <cstdint>

#include "relopt/closed_form.hpp"
#include "relopt/contract.hpp"
#include "relopt/models.hpp"

namespace relopt {

struct McConfig {
    std::size_t n_paths = 10000;
    unsigned steps_per_year = 8760;  // hourly, matching the data granularity
    std::uint64_t seed = 0;
    bool antithetic = false;

    friend bool operator==(const McConfig&, const McConfig&) = default;
};

struct McEstimate {
    double value = 0.0;      // EUR
    double std_error = 0.0;  // sample std of per-path payoffs / sqrt(n_paths)
    std::size_t n_paths = 0;
};

/// Monte Carlo price of the reliability option under any of the five models.
///
/// Paths are simulated with exact transitions on the uniform grid spanning
/// [0, t2]; the payoff time-integral is the trapezoid rule over the grid
/// points inside [t1, t2]. Per-path randomness comes from counter-based
/// streams keyed by (seed, path index), so the estimate is bit-identical for
/// a fixed McConfig regardless of n_workers or scheduling. Throws
/// ParameterError when fewer than two grid points fall inside the window.
McEstimate mc_price(const ModelSpec& model, const RoContract& contract, const McConfig& cfg,
                    unsigned n_workers = 1);

/// Spread-option form for the shifted dynamics (fixed strike C = P* - K*).
/// Identical to mc_price on the same ShiftedTwoOuParams; kept as the named
/// entry point for the no-closed-form case.
McEstimate mc_price_shifted(const ShiftedTwoOuParams& params, const RoContract& contract,
                            const McConfig& cfg, unsigned n_workers = 1);

/// The companion put-style integral Q E[int e^{-rt} (K_t - P_t)^+ dt] on the
/// same paths (same seed => same trajectories), so call - put telescopes to
/// the forward difference pathwise.
McEstimate mc_put_integral(const ModelSpec& model, const RoContract& contract,
                           const McConfig& cfg, unsigned n_workers = 1);

/// mc_price plus no-arbitrage bounds; within_bounds allows 3 std errors of
/// slack on top of the quadrature slack.
PricingResult price_monte_carlo(const ModelSpec& model, const RoContract& contract,
                                const McConfig& cfg, const QuadratureConfig& quad = {},
                                unsigned n_workers = 1);

/// Fixed-shape pairwise summation; deterministic for a given vector.
double pairwise_sum(const double* data, std::size_t n);

} // namespace relopt
