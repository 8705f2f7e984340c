#pragma once

#include <optional>
#include <vector>

#include "textalpha/dates.hpp"

namespace textalpha {

// Forecast horizon measured in trading days.
struct Horizon {
    int trading_days = 20;

    auto operator<=>(const Horizon&) const = default;
};

inline const std::vector<int> kDefaultHorizons = {5, 10, 20, 40, 60};

// Ordered set of trading days. All date arithmetic in the pipeline
// (anchoring, horizons, grouping windows) runs through this.
class TradingCalendar {
public:
    TradingCalendar() = default;
    explicit TradingCalendar(std::vector<Date> dates);  // sorts + dedups, throws on empty

    const std::vector<Date>& dates() const { return dates_; }
    size_t size() const { return dates_.size(); }
    Date front() const { return dates_.front(); }
    Date back() const { return dates_.back(); }

    bool contains(Date d) const;

    // Index of d; error if d is not a trading day.
    size_t index_of(Date d) const;

    // Earliest trading date strictly after the calendar date of ts.
    // Throws CalendarRangeError when ts is on/after the last trading day.
    Date next_trading_day(Timestamp ts) const;

    // d shifted forward by n trading days; nullopt when out of range.
    std::optional<Date> try_shift(Date d, int n) const;
    Date shift(Date d, int n) const;  // throwing variant

    // Number of trading dates in (a, b]; requires a <= b.
    int trading_days_between(Date a, Date b) const;

    // First trading date of each calendar month intersecting [start, end],
    // restricted to dates inside the window.
    std::vector<Date> month_starts(Date start, Date end) const;

private:
    std::vector<Date> dates_;
    size_t upper_bound_idx(Date d) const;  // first index with date > d
};

}  // namespace textalpha
