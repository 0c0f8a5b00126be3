#include "relopt/csv.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "relopt/errors.hpp"

namespace relopt {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw InputError(source + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

PriceSeries read_price_csv(std::istream& in, const std::string& source_name) {
    PriceSeries series;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw InputError(source_name + ": file is empty");
    ++line_no;
    if (strip(line) != "timestamp,price")
        fail(source_name, line_no, "expected header 'timestamp,price', got '" + strip(line) + "'");

    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = strip(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos) fail(source_name, line_no, "missing comma separator");

        CivilDateTime ts;
        try {
            ts = parse_timestamp(strip(row.substr(0, comma)));
        } catch (const InputError& e) {
            fail(source_name, line_no, e.what());
        }

        const std::string price_text = strip(row.substr(comma + 1));
        std::size_t used = 0;
        double price = 0.0;
        try {
            price = std::stod(price_text, &used);
        } catch (const std::exception&) {
            fail(source_name, line_no, "cannot parse price '" + price_text + "'");
        }
        if (used != price_text.size())
            fail(source_name, line_no, "cannot parse price '" + price_text + "'");

        if (!series.timestamps.empty() &&
            hours_from_epoch(ts) <= hours_from_epoch(series.timestamps.back()))
            fail(source_name, line_no, "timestamps are not strictly increasing");

        series.timestamps.push_back(ts);
        series.prices.push_back(price);
    }

    if (series.empty()) throw InputError(source_name + ": no data rows");
    return series;
}

PriceSeries read_price_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_price_csv(in, path);
}

} // namespace relopt
