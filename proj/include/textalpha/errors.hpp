#pragma once

#include <stdexcept>
#include <string>

namespace textalpha {

// Data-level problems (bad input files, missing prices, degenerate stats).
// The CLI maps these to exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CalendarRangeError : DataError {
    explicit CalendarRangeError(const std::string& msg) : DataError(msg) {}
};

struct MissingPriceError : DataError {
    explicit MissingPriceError(const std::string& msg) : DataError(msg) {}
};

struct EmptyUniverseError : DataError {
    explicit EmptyUniverseError(const std::string& msg) : DataError(msg) {}
};

struct DataFormatError : DataError {
    explicit DataFormatError(const std::string& msg) : DataError(msg) {}
};

struct MalformedDatasetError : DataError {
    explicit MalformedDatasetError(const std::string& msg) : DataError(msg) {}
};

struct InsufficientDataError : DataError {
    explicit InsufficientDataError(const std::string& msg) : DataError(msg) {}
};

struct UndefinedCorrelationError : DataError {
    explicit UndefinedCorrelationError(const std::string& msg) : DataError(msg) {}
};

struct EmptyPanelError : DataError {
    explicit EmptyPanelError(const std::string& msg) : DataError(msg) {}
};

struct EmptyReportError : DataError {
    explicit EmptyReportError(const std::string& msg) : DataError(msg) {}
};

struct InsufficientHistoryError : DataError {
    explicit InsufficientHistoryError(const std::string& msg) : DataError(msg) {}
};

// Broken internal invariant; CLI maps to exit code 3.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace textalpha
