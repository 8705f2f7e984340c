#include "textalpha/market.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "textalpha/errors.hpp"
#include "textalpha/util.hpp"

namespace textalpha {

PriceSeries::PriceSeries(std::string stock_id, std::vector<std::pair<Date, double>> quotes)
    : stock_id_(std::move(stock_id)), quotes_(std::move(quotes)) {
    std::sort(quotes_.begin(), quotes_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < quotes_.size(); ++i) {
        if (quotes_[i].second <= 0.0)
            throw DataFormatError("non-positive price for " + stock_id_ + " on " +
                                  quotes_[i].first.str());
        if (i > 0 && quotes_[i].first == quotes_[i - 1].first)
            throw DataFormatError("duplicate quote for " + stock_id_ + " on " +
                                  quotes_[i].first.str());
    }
}

std::optional<double> PriceSeries::price_at(Date d) const {
    auto it = std::lower_bound(quotes_.begin(), quotes_.end(), d,
                               [](const auto& q, Date x) { return q.first < x; });
    if (it == quotes_.end() || it->first != d) return std::nullopt;
    return it->second;
}

std::optional<double> PriceSeries::last_price_in(Date floor, Date d) const {
    auto it = std::upper_bound(quotes_.begin(), quotes_.end(), d,
                               [](Date x, const auto& q) { return x < q.first; });
    if (it == quotes_.begin()) return std::nullopt;
    --it;
    if (it->first < floor) return std::nullopt;
    return it->second;
}

const PriceSeries* MarketData::find(const std::string& stock_id) const {
    auto it = std::lower_bound(stocks.begin(), stocks.end(), stock_id,
                               [](const PriceSeries& s, const std::string& id) {
                                   return s.stock_id() < id;
                               });
    if (it == stocks.end() || it->stock_id() != stock_id) return nullptr;
    return &*it;
}

std::optional<double> try_horizon_return(const PriceSeries& ps, Date start, Horizon h,
                                         const TradingCalendar& cal) {
    auto end = cal.try_shift(start, h.trading_days);
    if (!end) return std::nullopt;
    auto p0 = ps.price_at(start);
    auto p1 = ps.price_at(*end);
    if (!p0 || !p1) return std::nullopt;
    return *p1 / *p0 - 1.0;
}

double horizon_return(const PriceSeries& ps, Date start, Horizon h, const TradingCalendar& cal) {
    Date end = cal.shift(start, h.trading_days);  // throws CalendarRangeError out of range
    auto p0 = ps.price_at(start);
    auto p1 = ps.price_at(end);
    if (!p0 || !p1)
        throw MissingPriceError("price missing for " + ps.stock_id() + " at " +
                                (p0 ? end.str() : start.str()));
    return *p1 / *p0 - 1.0;
}

std::optional<double> try_market_return(const std::vector<PriceSeries>& universe, Date start,
                                        Horizon h, const TradingCalendar& cal) {
    std::vector<double> rets;
    rets.reserve(universe.size());
    for (const auto& ps : universe) {  // universe sorted by id => ordered summation
        auto r = try_horizon_return(ps, start, h, cal);
        if (r) rets.push_back(*r);
    }
    if (rets.empty()) return std::nullopt;
    return mean_of(rets);
}

double market_return(const std::vector<PriceSeries>& universe, Date start, Horizon h,
                     const TradingCalendar& cal) {
    auto r = try_market_return(universe, start, h, cal);
    if (!r)
        throw EmptyUniverseError("no stock has valid prices at both endpoints for " + start.str() +
                                 " +" + std::to_string(h.trading_days) + "td");
    return *r;
}

namespace {

double parse_price(std::string_view s, size_t line_no) {
    double v = 0.0;
    auto sv = trim(s);
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc{} || p != sv.data() + sv.size())
        throw DataFormatError("price file line " + std::to_string(line_no) + ": bad price '" +
                              std::string(s) + "'");
    return v;
}

}  // namespace

MarketData load_prices_csv(std::istream& in, const TradingCalendar* external_calendar) {
    std::string line;
    if (!std::getline(in, line)) throw DataFormatError("price file is empty");
    if (trim(line) != "date,stock_id,adj_close")
        throw DataFormatError("price file: expected header 'date,stock_id,adj_close'");

    std::map<std::string, std::vector<std::pair<Date, double>>> by_stock;
    std::set<Date> dates;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto cols = split(line, ',');
        if (cols.size() != 3)
            throw DataFormatError("price file line " + std::to_string(line_no) +
                                  ": expected 3 columns");
        Date d = Date::parse(trim(cols[0]));
        double px = parse_price(cols[2], line_no);
        if (px <= 0.0)
            throw DataFormatError("price file line " + std::to_string(line_no) +
                                  ": price must be positive");
        by_stock[std::string(trim(cols[1]))].emplace_back(d, px);
        dates.insert(d);
    }
    if (by_stock.empty()) throw DataFormatError("price file has no data rows");

    MarketData md;
    if (external_calendar) {
        for (Date d : dates)
            if (!external_calendar->contains(d))
                throw DataFormatError("quote date " + d.str() + " not in supplied calendar");
        md.calendar = *external_calendar;
    } else {
        md.calendar = TradingCalendar(std::vector<Date>(dates.begin(), dates.end()));
    }
    md.stocks.reserve(by_stock.size());
    for (auto& [id, quotes] : by_stock) md.stocks.emplace_back(id, std::move(quotes));
    return md;
}

TradingCalendar load_calendar_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != "date")
        throw DataFormatError("calendar file: expected header 'date'");
    std::vector<Date> dates;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        dates.push_back(Date::parse(trim(line)));
    }
    return TradingCalendar(std::move(dates));
}

MarketData load_prices_file(const std::string& path, const std::string& calendar_path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open price file: " + path);
    if (calendar_path.empty()) return load_prices_csv(in);
    std::ifstream cin_(calendar_path);
    if (!cin_) throw DataError("cannot open calendar file: " + calendar_path);
    TradingCalendar cal = load_calendar_csv(cin_);
    return load_prices_csv(in, &cal);
}

void write_prices_csv(std::ostream& out, const MarketData& md) {
    out << "date,stock_id,adj_close\n";
    // Row order (date, stock) matches how a vendor dump would look and keeps
    // output bytes independent of internal layout.
    std::vector<std::tuple<Date, const std::string*, double>> rows;
    for (const auto& ps : md.stocks)
        for (const auto& [d, px] : ps.quotes()) rows.emplace_back(d, &ps.stock_id(), px);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return *std::get<1>(a) < *std::get<1>(b);
    });
    char buf[64];
    for (const auto& [d, id, px] : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f", px);
        out << d.str() << ',' << *id << ',' << buf << '\n';
    }
}

}  // namespace textalpha
