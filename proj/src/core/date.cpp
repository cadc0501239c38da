#include "core/date.hpp"

#include <cstdio>

#include "core/errors.hpp"

namespace nhb {

bool is_leap_year(int year) {
    return year % 4 == 0 && (year % 100 != 0 || year % 400 == 0);
}

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[month - 1];
}

bool Date::is_valid(int year, int month, int day) {
    if (year < -32768 || year > 32767) return false;
    if (month < 1 || month > 12) return false;
    return day >= 1 && day <= days_in_month(year, month);
}

// Civil-from-days / days-from-civil after Howard Hinnant's algorithms.
int64_t Date::to_days() const {
    int y = year;
    const int m = month;
    const int d = day;
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

Date Date::from_days(int64_t z) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    Date out;
    out.year = static_cast<int16_t>(y + (m <= 2));
    out.month = static_cast<uint8_t>(m);
    out.day = static_cast<uint8_t>(d);
    return out;
}

Date Date::parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char extra = 0;
    if (std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &extra) != 3 || iso.size() != 10)
        throw ParseError("invalid date: '" + iso + "' (expected YYYY-MM-DD)");
    if (!is_valid(y, m, d))
        throw ParseError("date out of range: '" + iso + "'");
    return Date{static_cast<int16_t>(y), static_cast<uint8_t>(m), static_cast<uint8_t>(d)};
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", static_cast<int>(year),
                  static_cast<int>(month), static_cast<int>(day));
    return buf;
}

int Date::day_of_year() const {
    static constexpr int kCum[] = {0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};
    int doy = kCum[month - 1] + day;
    if (month > 2 && is_leap_year(year)) doy += 1;
    return doy;
}

int Date::weekday() const {
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    int64_t days = to_days();
    return static_cast<int>(((days + 3) % 7 + 7) % 7);
}

Date Date::plus_days(int64_t n) const {
    return from_days(to_days() + n);
}

Date Date::plus_years(int n) const {
    int y = year + n;
    int d = day;
    if (month == 2 && d == 29 && !is_leap_year(y)) d = 28;
    return Date{static_cast<int16_t>(y), month, static_cast<uint8_t>(d)};
}

int age_in_years(const Date& birth, const Date& at) {
    int age = at.year - birth.year;
    if (at.month < birth.month || (at.month == birth.month && at.day < birth.day)) age -= 1;
    return age;
}

} // namespace nhb
