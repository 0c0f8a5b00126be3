#pragma once

#include <cmath>

namespace relopt {

inline double norm_pdf(double x) {
    static constexpr double kInvSqrt2Pi = 0.3989422804014327;
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

/// Standard normal CDF via erfc; accurate to ~1e-15 over the full range and
/// saturates cleanly for |x| large instead of overflowing.
inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

/// Inverse standard normal CDF (Wichura's PPND16). Full double precision
/// for p in (0,1); returns +/-inf at the endpoints.
double norm_inv(double p);

} // namespace relopt
