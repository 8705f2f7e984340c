#include "textalpha/dates.hpp"

#include <cstdio>

#include "textalpha/errors.hpp"

namespace textalpha {

namespace {

// Civil-from-days and days-from-civil, the standard O(1) Gregorian
// conversion (Howard Hinnant's public-domain algorithms).
int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t yy = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

}  // namespace

bool is_valid_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1) return false;
    static const int mdays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dmax = mdays[month - 1];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) dmax = 29;
    return day <= dmax;
}

Date Date::from_ymd(int year, int month, int day) {
    if (!is_valid_ymd(year, month, day))
        throw DataFormatError("invalid calendar date: " + std::to_string(year) + "-" +
                              std::to_string(month) + "-" + std::to_string(day));
    return Date{static_cast<int32_t>(days_from_civil(year, month, day))};
}

void Date::to_ymd(int& year, int& month, int& day) const {
    civil_from_days(serial, year, month, day);
}

int Date::year() const {
    int y, m, d;
    to_ymd(y, m, d);
    return y;
}

int Date::month() const {
    int y, m, d;
    to_ymd(y, m, d);
    return m;
}

std::string Date::str() const {
    int y, m, d;
    to_ymd(y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

Date Date::parse(std::string_view s) {
    int y, m, d;
    if (s.size() != 10 || std::sscanf(std::string(s).c_str(), "%4d-%2d-%2d", &y, &m, &d) != 3)
        throw DataFormatError("bad date '" + std::string(s) + "' (want YYYY-MM-DD)");
    return from_ymd(y, m, d);
}

Timestamp Timestamp::parse(std::string_view s) {
    if (s.size() == 10) return Timestamp{Date::parse(s), 0};
    int y, m, d, hh, mm, ss;
    if (s.size() == 19 &&
        std::sscanf(std::string(s).c_str(), "%4d-%2d-%2d %2d:%2d:%2d", &y, &m, &d, &hh, &mm, &ss) == 6) {
        if (hh < 0 || hh > 23 || mm < 0 || mm > 59 || ss < 0 || ss > 59)
            throw DataFormatError("bad time of day in '" + std::string(s) + "'");
        return Timestamp{Date::from_ymd(y, m, d), hh * 3600 + mm * 60 + ss};
    }
    throw DataFormatError("bad timestamp '" + std::string(s) + "' (want YYYY-MM-DD[ HH:MM:SS])");
}

std::string Timestamp::str() const {
    char buf[32];
    int hh = seconds / 3600, mm = (seconds / 60) % 60, ss = seconds % 60;
    std::snprintf(buf, sizeof(buf), "%s %02d:%02d:%02d", date.str().c_str(), hh, mm, ss);
    return buf;
}

}  // namespace textalpha
