#pragma once

#include <cstddef>
#include <vector>

#include "relopt/calendar.hpp"

namespace relopt {

/// Hourly spot observations as read from the market file. Timestamps must be
/// strictly increasing; rows are kept exactly as given (no resampling, no
/// DST repair).
struct PriceSeries {
    std::vector<CivilDateTime> timestamps;
    std::vector<double> prices;  // EUR/MWh

    std::size_t size() const { return prices.size(); }
    bool empty() const { return prices.empty(); }
};

/// Throws InputError if lengths differ, timestamps are not strictly
/// increasing, or any timestamp is invalid.
void validate_series(const PriceSeries& s);

} // namespace relopt
