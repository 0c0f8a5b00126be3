#pragma once

#include <optional>

namespace relopt {

/// A reliability option: the holder receives Q * (P_t - K_t)^+ continuously
/// over the delivery window [t1, t2], discounted at rate r. The strike is
/// either a fixed level or follows its own dynamics inside the model.
struct RoContract {
    double q = 1.0;   // committed capacity, MW
    double t1 = 4.0;  // window start, years from valuation
    double t2 = 7.0;  // window end, years
    double r = 0.01;  // risk-free rate, per year
    std::optional<double> fixed_strike = 40.0;  // EUR/MWh; nullopt = stochastic strike

    bool has_fixed_strike() const { return fixed_strike.has_value(); }

    friend bool operator==(const RoContract&, const RoContract&) = default;
};

/// Throws ParameterError when q <= 0, the window is not 0 < t1 < t2, or a
/// fixed strike is negative.
void validate(const RoContract& c);

/// The discounted window length (e^{-r t1} - e^{-r t2}) / r, continued to
/// t2 - t1 at r = 0. This is the annuity that multiplies constant flows.
double discount_annuity(double r, double t1, double t2);

} // namespace relopt
