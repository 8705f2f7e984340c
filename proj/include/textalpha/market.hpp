#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "textalpha/calendar.hpp"

namespace textalpha {

// Adjusted-close history of one stock. Quote dates are a subset of the
// calendar; gaps are suspensions.
class PriceSeries {
public:
    PriceSeries() = default;
    PriceSeries(std::string stock_id, std::vector<std::pair<Date, double>> quotes);

    const std::string& stock_id() const { return stock_id_; }
    const std::vector<std::pair<Date, double>>& quotes() const { return quotes_; }

    std::optional<double> price_at(Date d) const;
    // Most recent quote with date in [floor, d]; used for suspended stocks.
    std::optional<double> last_price_in(Date floor, Date d) const;

private:
    std::string stock_id_;
    std::vector<std::pair<Date, double>> quotes_;  // sorted by date
};

// The whole price universe, stocks ordered by id (all cross-sectional
// reductions iterate in this order, so results are evaluation-order free).
struct MarketData {
    TradingCalendar calendar;
    std::vector<PriceSeries> stocks;  // sorted by stock_id

    const PriceSeries* find(const std::string& stock_id) const;
};

// price(start + h trading days) / price(start) - 1.
// nullopt when the price is missing at either endpoint or the end date
// falls outside the calendar; callers skip such samples.
std::optional<double> try_horizon_return(const PriceSeries& ps, Date start, Horizon h,
                                         const TradingCalendar& cal);
double horizon_return(const PriceSeries& ps, Date start, Horizon h, const TradingCalendar& cal);

// Equal-weight mean of horizon_return over stocks with both endpoints quoted.
std::optional<double> try_market_return(const std::vector<PriceSeries>& universe, Date start,
                                        Horizon h, const TradingCalendar& cal);
double market_return(const std::vector<PriceSeries>& universe, Date start, Horizon h,
                     const TradingCalendar& cal);

inline double active_return(double stock_ret, double mkt_ret) { return stock_ret - mkt_ret; }

// CSV `date,stock_id,adj_close`. Calendar is the sorted set of distinct
// dates in the file unless an external calendar is supplied, in which
// case every quote date must be a member of it.
MarketData load_prices_csv(std::istream& in, const TradingCalendar* external_calendar = nullptr);
MarketData load_prices_file(const std::string& path, const std::string& calendar_path = "");

// One-column `date` CSV.
TradingCalendar load_calendar_csv(std::istream& in);

void write_prices_csv(std::ostream& out, const MarketData& md);

}  // namespace textalpha
