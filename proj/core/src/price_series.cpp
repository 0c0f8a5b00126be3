#include "relopt/price_series.hpp"

#include <string>

#include "relopt/errors.hpp"

namespace relopt {
void validate_series(const PriceSeries& s) {
    if (s.timestamps.size() != s.prices.size())
        throw InputError("price series has " + std::to_string(s.timestamps.size()) +
                         " timestamps but " + std::to_string(s.prices.size()) + " prices");
    for (std::size_t i = 0; i < s.timestamps.size(); ++i) {
        validate_civil(s.timestamps[i]);
        if (i > 0 && hours_from_epoch(s.timestamps[i]) <= hours_from_epoch(s.timestamps[i - 1]))
            throw InputError("price series timestamps must be strictly increasing (row " +
                             std::to_string(i + 1) + ")");
    }
}

} // namespace relopt
