#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace nhb {

// Proleptic Gregorian calendar date. Stored as civil fields; arithmetic goes
// through days-since-epoch (1970-01-01 = day 0).
struct Date {
    int16_t year = 1970;
    uint8_t month = 1; // 1..12
    uint8_t day = 1;   // 1..31

    static Date from_days(int64_t days_since_epoch);
    static Date parse(const std::string& iso); // "YYYY-MM-DD", throws ParseError
    static bool is_valid(int year, int month, int day);

    int64_t to_days() const;
    std::string iso() const;
    int day_of_year() const;  // 1..366
    int weekday() const;      // 0 = Monday .. 6 = Sunday
    Date plus_days(int64_t n) const;
    // Civil-year shift; Feb 29 maps to Feb 28 on non-leap targets.
    Date plus_years(int n) const;

    auto operator<=>(const Date&) const = default;
};

// Completed years between birth and a reference date (birthday arithmetic).
int age_in_years(const Date& birth, const Date& at);

bool is_leap_year(int year);
int days_in_month(int year, int month);

} // namespace nhb
