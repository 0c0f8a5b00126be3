#include "relopt/rng.hpp"

#include "relopt/errors.hpp"

namespace relopt {

std::pair<double, double> correlated_normals(double z1, double z2, double rho) {
    if (!(std::fabs(rho) <= 1.0))
        throw ParameterError("correlation must lie in [-1,1], got " + std::to_string(rho));
    return {z1, rho * z1 + std::sqrt(1.0 - rho * rho) * z2};
}

} // namespace relopt
