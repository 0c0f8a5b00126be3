#pragma once

#include <cstddef>
#include <functional>

namespace relopt {

struct QuadratureConfig {
    /// Absolute tolerance in EUR. 0 means "auto": pricing routines resolve
    /// it to 1e-6 * Q * (t2 - t1).
    double abs_tol = 0.0;
    std::size_t max_subdivisions = 20000;

    friend bool operator==(const QuadratureConfig&, const QuadratureConfig&) = default;
};

/// Adaptive Simpson integration of a continuous integrand over [t1, t2] to
/// absolute tolerance cfg.abs_tol (which must be > 0 here). The richness
/// estimate is the usual |S_half - S| / 15 from interval halving. Throws
/// NumericalError carrying the best estimate when the subdivision budget is
/// exhausted before the tolerance is met.
double integrate_window(const std::function<double(double)>& integrand, double t1, double t2,
                        const QuadratureConfig& cfg);

} // namespace relopt
