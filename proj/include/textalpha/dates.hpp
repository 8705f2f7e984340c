#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace textalpha {

// Calendar date, stored as days since 1970-01-01 (proleptic Gregorian).
struct Date {
    int32_t serial = 0;

    auto operator<=>(const Date&) const = default;

    static Date from_ymd(int year, int month, int day);
    static Date parse(std::string_view s);  // "YYYY-MM-DD", throws DataFormatError

    void to_ymd(int& year, int& month, int& day) const;
    int year() const;
    int month() const;
    // (year, month) packed for month-boundary comparisons.
    int year_month() const { return year() * 12 + (month() - 1); }

    std::string str() const;  // "YYYY-MM-DD"

    Date plus_days(int n) const { return Date{serial + n}; }
};

// Date plus optional time of day; reports carry these.
struct Timestamp {
    Date date;
    int32_t seconds = 0;  // 0..86399

    auto operator<=>(const Timestamp&) const = default;

    // "YYYY-MM-DD" or "YYYY-MM-DD HH:MM:SS", throws DataFormatError
    static Timestamp parse(std::string_view s);
    std::string str() const;
};

bool is_valid_ymd(int year, int month, int day);

}  // namespace textalpha
