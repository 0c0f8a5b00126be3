#include <gtest/gtest.h>

#include "relopt/calendar.hpp"
#include "relopt/errors.hpp"

using namespace relopt;

TEST(Calendar, DayCategoryKnownDates) {
    EXPECT_EQ(day_category({2016, 1, 1, 0}), DayCategory::Friday);
    EXPECT_EQ(day_category({2016, 1, 2, 0}), DayCategory::Weekend);   // Saturday
    EXPECT_EQ(day_category({2016, 1, 3, 0}), DayCategory::Weekend);   // Sunday
    EXPECT_EQ(day_category({2016, 1, 4, 0}), DayCategory::Monday);
    EXPECT_EQ(day_category({2016, 1, 5, 0}), DayCategory::OtherWorking);  // Tuesday
    EXPECT_EQ(day_category({2016, 1, 6, 0}), DayCategory::OtherWorking);  // Wednesday
    EXPECT_EQ(day_category({2016, 1, 7, 0}), DayCategory::OtherWorking);  // Thursday
}

TEST(Calendar, InvalidDatesThrow) {
    EXPECT_THROW(day_category({2015, 2, 29, 0}), InputError);
    EXPECT_THROW(day_category({2016, 13, 1, 0}), InputError);
    EXPECT_THROW(day_category({2016, 4, 31, 0}), InputError);
    EXPECT_THROW(validate_civil({2016, 1, 1, 24}), InputError);
    EXPECT_NO_THROW(day_category({2016, 2, 29, 0}));  // leap year
}

TEST(Calendar, HourSerialRoundTrip) {
    const CivilDateTime t{2016, 3, 14, 15};
    EXPECT_EQ(civil_from_hours(hours_from_epoch(t)), t);
    EXPECT_EQ(add_hours(t, 24), (CivilDateTime{2016, 3, 15, 15}));
    EXPECT_EQ(add_hours(t, -16), (CivilDateTime{2016, 3, 13, 23}));
    // 2016 is a leap year: 8784 hours from Jan 1 lands on Jan 1, 2017.
    EXPECT_EQ(add_hours({2016, 1, 1, 0}, 8784), (CivilDateTime{2017, 1, 1, 0}));
}

TEST(Calendar, CalendarPointSelectsExactlyOneBucket) {
    const CalendarPoint p = calendar_point({2016, 4, 9, 0});  // Saturday, hour 1
    EXPECT_EQ(p.month, 4);
    EXPECT_EQ(p.day_category, DayCategory::Weekend);
    EXPECT_EQ(p.hour, 1);
    const CalendarPoint q = calendar_point({2016, 12, 30, 23});  // Friday, hour 24
    EXPECT_EQ(q.month, 12);
    EXPECT_EQ(q.day_category, DayCategory::Friday);
    EXPECT_EQ(q.hour, 24);
}

TEST(Calendar, ParseTimestamp) {
    EXPECT_EQ(parse_timestamp("2016-01-01T00:00"), (CivilDateTime{2016, 1, 1, 0}));
    EXPECT_EQ(parse_timestamp("2016-01-01 13:00"), (CivilDateTime{2016, 1, 1, 13}));
    EXPECT_EQ(parse_timestamp("2016-01-01T23:00:00"), (CivilDateTime{2016, 1, 1, 23}));
    EXPECT_THROW(parse_timestamp("2016-01-01"), InputError);
    EXPECT_THROW(parse_timestamp("2016-01-01T00:30"), InputError);  // not on the hour
    EXPECT_THROW(parse_timestamp("01/01/2016 00:00"), InputError);
    EXPECT_THROW(parse_timestamp("2016-02-30T00:00"), InputError);
}

TEST(Calendar, FormatRoundTrip) {
    const CivilDateTime t{2016, 11, 5, 7};
    EXPECT_EQ(parse_timestamp(format_timestamp(t)), t);
}
