#pragma once

#include <cstdint>
#include <string>

namespace relopt {

/// Day-of-week buckets used by the seasonality regression. Friday is the
/// base category; Tuesday through Thursday fall under OtherWorking.
enum class DayCategory : int { Friday = 0, Weekend = 1, Monday = 2, OtherWorking = 3 };

constexpr int kDayCategoryCount = 4;

const char* day_category_name(DayCategory c);

/// A civil timestamp at hourly resolution, local market time. No time zone
/// arithmetic is performed; values are taken as written in the data.
struct CivilDateTime {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31
    int hour = 0;   // 0..23

    friend bool operator==(const CivilDateTime&, const CivilDateTime&) = default;
};

/// The dummy selectors extracted from a timestamp: calendar month, day
/// category and hour-of-day indexed 1..24 (hour 1 = 00:00-01:00).
struct CalendarPoint {
    int month = 1;  // 1..12
    DayCategory day_category = DayCategory::Friday;
    int hour = 1;  // 1..24

    friend bool operator==(const CalendarPoint&, const CalendarPoint&) = default;
};

/// Throws InputError unless the timestamp is a real civil date/hour.
void validate_civil(const CivilDateTime& t);

/// Serial hour count since 1970-01-01T00:00 (proleptic Gregorian).
std::int64_t hours_from_epoch(const CivilDateTime& t);

/// Inverse of hours_from_epoch.
CivilDateTime civil_from_hours(std::int64_t hours);

CivilDateTime add_hours(const CivilDateTime& t, std::int64_t n);

DayCategory day_category(const CivilDateTime& t);

CalendarPoint calendar_point(const CivilDateTime& t);

/// Parses "YYYY-MM-DDTHH:MM[:SS]" (or with a space separator); minutes and
/// seconds must be zero padding of the hour. Throws InputError on anything
/// else.
CivilDateTime parse_timestamp(const std::string& text);

std::string format_timestamp(const CivilDateTime& t);

} // namespace relopt
