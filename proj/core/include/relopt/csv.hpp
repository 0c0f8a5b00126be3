#pragma once

#include <iosfwd>
#include <string>

#include "relopt/price_series.hpp"

namespace relopt {

/// Reads `timestamp,price` rows (ISO-8601 local civil hour, decimal EUR/MWh).
/// Rows must already be in chronological order; nothing is resampled or
/// deduplicated. Throws InputError naming the offending line.
PriceSeries read_price_csv(std::istream& in, const std::string& source_name = "<stream>");
PriceSeries read_price_csv(const std::string& path);

} // namespace relopt
