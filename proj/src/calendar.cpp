#include "textalpha/calendar.hpp"

#include <algorithm>

#include "textalpha/errors.hpp"

namespace textalpha {

TradingCalendar::TradingCalendar(std::vector<Date> dates) : dates_(std::move(dates)) {
    std::sort(dates_.begin(), dates_.end());
    dates_.erase(std::unique(dates_.begin(), dates_.end()), dates_.end());
    if (dates_.empty()) throw DataFormatError("trading calendar is empty");
}

bool TradingCalendar::contains(Date d) const {
    return std::binary_search(dates_.begin(), dates_.end(), d);
}

size_t TradingCalendar::index_of(Date d) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d)
        throw CalendarRangeError(d.str() + " is not a trading day");
    return static_cast<size_t>(it - dates_.begin());
}

size_t TradingCalendar::upper_bound_idx(Date d) const {
    return static_cast<size_t>(std::upper_bound(dates_.begin(), dates_.end(), d) - dates_.begin());
}

Date TradingCalendar::next_trading_day(Timestamp ts) const {
    size_t i = upper_bound_idx(ts.date);
    if (i == dates_.size())
        throw CalendarRangeError("no trading day after " + ts.date.str());
    return dates_[i];
}

std::optional<Date> TradingCalendar::try_shift(Date d, int n) const {
    auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end() || *it != d) return std::nullopt;
    auto i = static_cast<long>(it - dates_.begin()) + n;
    if (i < 0 || i >= static_cast<long>(dates_.size())) return std::nullopt;
    return dates_[static_cast<size_t>(i)];
}

Date TradingCalendar::shift(Date d, int n) const {
    auto r = try_shift(d, n);
    if (!r)
        throw CalendarRangeError("shift of " + d.str() + " by " + std::to_string(n) +
                                 " trading days leaves the calendar");
    return *r;
}

int TradingCalendar::trading_days_between(Date a, Date b) const {
    if (b < a) throw InvariantError("trading_days_between: b < a");
    return static_cast<int>(upper_bound_idx(b) - upper_bound_idx(a));
}

std::vector<Date> TradingCalendar::month_starts(Date start, Date end) const {
    std::vector<Date> out;
    int prev_ym = -1;
    auto it = std::lower_bound(dates_.begin(), dates_.end(), start);
    for (; it != dates_.end() && *it <= end; ++it) {
        int ym = it->year_month();
        if (ym != prev_ym) {
            out.push_back(*it);
            prev_ym = ym;
        }
    }
    return out;
}

}  // namespace textalpha
