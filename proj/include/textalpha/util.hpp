#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace textalpha {

// All floating-point output goes through this: 12 significant digits,
// so identical runs produce identical bytes.
inline std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// Recursive pairwise summation. Splitting at the midpoint makes the sum of a
// back-to-back duplicated sequence exactly twice the sum of the original,
// which the full-batch training path relies on.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 2) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    size_t mid = xs.size() / 2;
    return pairwise_sum(xs.first(mid)) + pairwise_sum(xs.subspan(mid));
}

inline double mean_of(std::span<const double> xs) {
    return pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace textalpha
