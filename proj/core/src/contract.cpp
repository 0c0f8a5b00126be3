#include "relopt/contract.hpp"

#include <cmath>
#include <string>

#include "relopt/errors.hpp"

namespace relopt {

void validate(const RoContract& c) {
    if (!(c.q > 0.0)) throw ParameterError("contract capacity q must be positive");
    if (!(0.0 < c.t1 && c.t1 < c.t2))
        throw ParameterError("contract window must satisfy 0 < t1 < t2, got [" +
                             std::to_string(c.t1) + ", " + std::to_string(c.t2) + "]");
    if (!std::isfinite(c.r)) throw ParameterError("contract rate r must be finite");
    if (c.fixed_strike && !(*c.fixed_strike >= 0.0))
        throw ParameterError("fixed strike must be >= 0");
}

double discount_annuity(double r, double t1, double t2) {
    if (r == 0.0) return t2 - t1;
    // e^{-r t1} (1 - e^{-r (t2-t1)}) / r, stable for small r.
    return std::exp(-r * t1) * (-std::expm1(-r * (t2 - t1))) / r;
}

} // namespace relopt
