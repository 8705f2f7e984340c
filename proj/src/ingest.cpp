#include "textalpha/ingest.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "textalpha/errors.hpp"
#include "textalpha/util.hpp"

namespace textalpha {

using nlohmann::json;

ParseResult parse_reports(std::istream& in) {
    if (!in) throw DataError("report stream unreadable");
    ParseResult out;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    size_t line_no = 0, n_nonempty = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ++n_nonempty;
        auto reject = [&](const std::string& why) { out.rejects.push_back({line_no, why}); };
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            reject("not a JSON object");
            continue;
        }
        bool ok = true;
        for (const char* key : {"stock_id", "release_time", "title", "abstract", "report_id"}) {
            if (!j.contains(key) || !j[key].is_string()) {
                reject(std::string("missing or non-string field '") + key + "'");
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        Report r;
        r.stock_id = j["stock_id"].get<std::string>();
        r.title = j["title"].get<std::string>();
        r.abstract = j["abstract"].get<std::string>();
        r.report_id = j["report_id"].get<std::string>();
        if (r.title.empty()) {
            reject("empty title");
            continue;
        }
        try {
            r.release_time = Timestamp::parse(j["release_time"].get<std::string>());
        } catch (const DataFormatError& e) {
            reject(e.what());
            continue;
        }
        if (!seen_ids.insert(r.report_id).second) {
            reject("duplicate report_id '" + r.report_id + "'");
            continue;
        }
        out.reports.push_back(std::move(r));
    }
    if (n_nonempty > 0 && out.rejects.size() * 2 > n_nonempty)
        throw MalformedDatasetError(std::to_string(out.rejects.size()) + " of " +
                                    std::to_string(n_nonempty) + " report lines rejected");
    return out;
}

GroupResult group_reports(std::vector<Report> reports, int window, const TradingCalendar& cal) {
    if (window < 1) throw InvariantError("grouping window must be >= 1 trading day");
    GroupResult out;

    std::map<std::string, std::vector<Report>> by_stock;
    for (auto& r : reports) by_stock[r.stock_id].push_back(std::move(r));

    for (auto& [stock_id, rs] : by_stock) {
        std::sort(rs.begin(), rs.end(), [](const Report& a, const Report& b) {
            if (a.release_time != b.release_time) return a.release_time < b.release_time;
            return a.report_id < b.report_id;
        });
        std::vector<std::vector<Report>> chains;
        for (auto& r : rs) {
            bool chain = false;
            if (!chains.empty()) {
                Date prev = chains.back().back().release_time.date;
                Date cur = r.release_time.date;
                chain = cal.trading_days_between(prev, cur) <= window;
            }
            if (chain)
                chains.back().push_back(std::move(r));
            else
                chains.push_back({std::move(r)});
        }
        for (auto& members : chains) {
            ReportGroup g;
            g.stock_id = stock_id;
            try {
                g.anchor_date = cal.next_trading_day(members.back().release_time);
            } catch (const CalendarRangeError&) {
                ++out.n_unanchored;
                continue;
            }
            g.members = std::move(members);
            out.groups.push_back(std::move(g));
        }
    }
    std::sort(out.groups.begin(), out.groups.end(), [](const ReportGroup& a, const ReportGroup& b) {
        if (a.stock_id != b.stock_id) return a.stock_id < b.stock_id;
        return a.anchor_date < b.anchor_date;
    });
    return out;
}

LabelResult label_groups(const std::vector<ReportGroup>& groups, const MarketData& md,
                         const std::vector<int>& horizons) {
    if (horizons.empty()) throw InvariantError("label_groups: horizons must be non-empty");
    LabelResult out;

    // Market returns are shared across groups with the same anchor; compute
    // each (date, horizon) pair once.
    std::set<Date> anchors;
    for (const auto& g : groups) anchors.insert(g.anchor_date);
    std::map<std::pair<Date, int>, std::optional<double>> mkt;
    for (Date d : anchors)
        for (int h : horizons)
            mkt[{d, h}] = try_market_return(md.stocks, d, Horizon{h}, md.calendar);

    for (const auto& g : groups) {
        const PriceSeries* ps = md.find(g.stock_id);
        if (!ps) {
            ++out.n_skipped_no_prices;
            continue;
        }
        LabeledSample s;
        for (int h : horizons) {
            auto stock_ret = try_horizon_return(*ps, g.anchor_date, Horizon{h}, md.calendar);
            auto mkt_ret = mkt.at({g.anchor_date, h});
            if (stock_ret && mkt_ret) s.labels[h] = active_return(*stock_ret, *mkt_ret);
        }
        if (s.labels.empty()) {
            ++out.n_dropped_no_label;
            continue;
        }
        std::string text;
        for (const auto& r : g.members) {
            if (!text.empty()) text += '\n';
            text += r.title;
            text += '\n';
            text += r.abstract;
        }
        s.text = std::move(text);
        s.group = g;
        out.samples.push_back(std::move(s));
    }
    return out;
}

void write_labeled_samples(std::ostream& out, const std::vector<LabeledSample>& samples) {
    for (const auto& s : samples) {
        json j;
        j["stock_id"] = s.stock_id();
        j["anchor_date"] = s.anchor_date().str();
        json hs = json::object();
        for (const auto& [h, v] : s.labels) hs[std::to_string(h)] = v;
        j["horizons"] = hs;
        j["text"] = s.text;
        json ids = json::array();
        for (const auto& r : s.group.members) ids.push_back(r.report_id);
        j["report_ids"] = ids;
        out << j.dump() << '\n';
    }
}

std::vector<LabeledSample> read_labeled_samples(std::istream& in) {
    std::vector<LabeledSample> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw DataFormatError("labeled-sample cache line " + std::to_string(line_no) +
                                  ": bad JSON");
        LabeledSample s;
        s.group.stock_id = j.at("stock_id").get<std::string>();
        s.group.anchor_date = Date::parse(j.at("anchor_date").get<std::string>());
        for (auto& [k, v] : j.at("horizons").items()) s.labels[std::stoi(k)] = v.get<double>();
        s.text = j.at("text").get<std::string>();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace textalpha
