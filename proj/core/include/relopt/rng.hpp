#pragma once

#include <cstdint>
#include <utility>

#include "relopt/distributions.hpp"

namespace relopt {

/// SplitMix64 finalizer: a bijective 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// Counter-based uniform word: draw k of the stream identified by `seed`.
/// Pure function of (seed, k), so any path/thread can regenerate any draw.
inline std::uint64_t counter_u64(std::uint64_t seed, std::uint64_t k) {
    return mix64(seed + (k + 1) * kGolden);
}

/// Derives the per-path stream seed from the master seed. Injective in
/// path_index for a fixed master seed.
inline std::uint64_t derive_path_seed(std::uint64_t master_seed, std::uint64_t path_index) {
    return mix64(master_seed ^ counter_u64(0x8E51'2CAF'31D0'77F3ULL, path_index));
}

/// Uniform double strictly inside (0,1): 53-bit mantissa, offset half an ulp.
inline double counter_uniform(std::uint64_t seed, std::uint64_t k) {
    return (static_cast<double>(counter_u64(seed, k) >> 11) + 0.5) * 0x1.0p-53;
}

/// Sequential view over one counter-based stream, delivering N(0,1) draws
/// through the inverse CDF (no rejection, so consumption order is fixed).
class NormalStream {
public:
    explicit NormalStream(std::uint64_t stream_seed) : seed_(stream_seed) {}

    double next() { return norm_inv(counter_uniform(seed_, counter_++)); }

    std::uint64_t consumed() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Correlates a pair of independent standard normals:
/// (z1, rho*z1 + sqrt(1-rho^2)*z2). Throws ParameterError for |rho| > 1.
std::pair<double, double> correlated_normals(double z1, double z2, double rho);

} // namespace relopt
