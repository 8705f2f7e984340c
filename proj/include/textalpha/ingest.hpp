#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "textalpha/market.hpp"

namespace textalpha {

struct Report {
    std::string stock_id;
    Timestamp release_time;
    std::string title;
    std::string abstract;
    std::string report_id;
};

// Reports of one stock chained by adjacent release dates. anchor_date is
// the first trading day strictly after the last member's release.
struct ReportGroup {
    std::string stock_id;
    std::vector<Report> members;  // sorted by release_time
    Date anchor_date;
};

struct LabeledSample {
    ReportGroup group;
    std::map<int, double> labels;  // horizon trading days -> active return
    std::string text;              // member titles/abstracts joined by '\n'

    const std::string& stock_id() const { return group.stock_id; }
    Date anchor_date() const { return group.anchor_date; }
};

struct RejectedLine {
    size_t line_no = 0;
    std::string reason;
};

struct ParseResult {
    std::vector<Report> reports;
    std::vector<RejectedLine> rejects;
};

// JSON-lines, one object per line with keys
// stock_id, release_time, title, abstract, report_id.
// More than half rejected lines => MalformedDatasetError.
ParseResult parse_reports(std::istream& in);

struct GroupResult {
    std::vector<ReportGroup> groups;  // sorted by (stock_id, anchor_date)
    size_t n_unanchored = 0;          // last member released past calendar end
};

// Chained grouping: a report joins the current group iff its release date is
// within `window` trading days of the previous member's release date.
GroupResult group_reports(std::vector<Report> reports, int window, const TradingCalendar& cal);

struct LabelResult {
    std::vector<LabeledSample> samples;
    size_t n_dropped_no_label = 0;  // no horizon computable
    size_t n_skipped_no_prices = 0; // stock absent from the price file
};

LabelResult label_groups(const std::vector<ReportGroup>& groups, const MarketData& md,
                         const std::vector<int>& horizons);

// Cache format: JSON-lines with stock_id, anchor_date, horizons, text, report_ids.
void write_labeled_samples(std::ostream& out, const std::vector<LabeledSample>& samples);
std::vector<LabeledSample> read_labeled_samples(std::istream& in);

}  // namespace textalpha
