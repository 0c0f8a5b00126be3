#include "relopt/calendar.hpp"

#include <array>
#include <cstdio>

#include "relopt/errors.hpp"

namespace relopt {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[static_cast<std::size_t>(m - 1)];
}

// Days since 1970-01-01 in the proleptic Gregorian calendar.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

// 0 = Sunday ... 6 = Saturday.
int weekday_from_days(std::int64_t z) {
    return static_cast<int>(z >= -4 ? (z + 4) % 7 : (z + 5) % 7 + 6);
}

} // namespace

const char* day_category_name(DayCategory c) {
    switch (c) {
        case DayCategory::Friday: return "friday";
        case DayCategory::Weekend: return "weekend";
        case DayCategory::Monday: return "monday";
        case DayCategory::OtherWorking: return "working_day";
    }
    return "?";
}

void validate_civil(const CivilDateTime& t) {
    if (t.month < 1 || t.month > 12)
        throw InputError("invalid month in timestamp: " + std::to_string(t.month));
    if (t.day < 1 || t.day > days_in_month(t.year, t.month))
        throw InputError("invalid day of month in timestamp: " + std::to_string(t.day));
    if (t.hour < 0 || t.hour > 23)
        throw InputError("invalid hour in timestamp: " + std::to_string(t.hour));
}

std::int64_t hours_from_epoch(const CivilDateTime& t) {
    return days_from_civil(t.year, t.month, t.day) * 24 + t.hour;
}

CivilDateTime civil_from_hours(std::int64_t hours) {
    std::int64_t days = hours >= 0 ? hours / 24 : (hours - 23) / 24;
    int h = static_cast<int>(hours - days * 24);
    CivilDateTime t;
    civil_from_days(days, t.year, t.month, t.day);
    t.hour = h;
    return t;
}

CivilDateTime add_hours(const CivilDateTime& t, std::int64_t n) {
    return civil_from_hours(hours_from_epoch(t) + n);
}

DayCategory day_category(const CivilDateTime& t) {
    validate_civil(t);
    switch (weekday_from_days(days_from_civil(t.year, t.month, t.day))) {
        case 5: return DayCategory::Friday;
        case 0:
        case 6: return DayCategory::Weekend;
        case 1: return DayCategory::Monday;
        default: return DayCategory::OtherWorking;  // Tue, Wed, Thu
    }
}

CalendarPoint calendar_point(const CivilDateTime& t) {
    CalendarPoint p;
    p.month = t.month;
    p.day_category = day_category(t);
    p.hour = t.hour + 1;
    return p;
}

CivilDateTime parse_timestamp(const std::string& text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    int n = std::sscanf(text.c_str(), "%d-%d-%d%c%d:%d:%d", &y, &mo, &d, &sep, &h, &mi, &s);
    if (n < 6 || (sep != 'T' && sep != ' '))
        throw InputError("malformed timestamp '" + text + "' (expected YYYY-MM-DDTHH:MM)");
    if (mi != 0 || (n == 7 && s != 0))
        throw InputError("timestamp '" + text + "' is not on an hour boundary");
    CivilDateTime t{y, mo, d, h};
    validate_civil(t);
    return t;
}

std::string format_timestamp(const CivilDateTime& t) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:00", t.year, t.month, t.day, t.hour);
    return buf;
}

} // namespace relopt
