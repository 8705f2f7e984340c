#include "textalpha/features.hpp"

#include <algorithm>
#include <unordered_map>

#include "textalpha/errors.hpp"
#include "textalpha/hashing.hpp"

namespace textalpha {

double FeatureVector::total_count() const {
    double s = 0.0;
    for (const auto& [i, c] : entries) s += c;
    return s;
}

namespace {

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Length in bytes of the UTF-8 sequence starting at s[i]; malformed bytes
// are treated as single-byte units so tokenization never fails.
size_t utf8_len(std::string_view s, size_t i) {
    unsigned char c = s[i];
    size_t n = 1;
    if ((c & 0x80) == 0x00) n = 1;
    else if ((c & 0xE0) == 0xC0) n = 2;
    else if ((c & 0xF0) == 0xE0) n = 3;
    else if ((c & 0xF8) == 0xF0) n = 4;
    for (size_t k = 1; k < n; ++k)
        if (i + k >= s.size() || (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return 1;
    return n;
}

}  // namespace

std::vector<std::string> tokenize_units(std::string_view text, int max_seq_len) {
    std::vector<std::string> units;
    size_t i = 0;
    while (i < text.size() && static_cast<int>(units.size()) < max_seq_len) {
        unsigned char c = text[i];
        if (c < 0x80) {
            if (is_ascii_space(c)) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < text.size() && static_cast<unsigned char>(text[j]) < 0x80 &&
                   !is_ascii_space(text[j]))
                ++j;
            units.emplace_back(text.substr(i, j - i));
            i = j;
        } else {
            size_t n = utf8_len(text, i);
            units.emplace_back(text.substr(i, n));
            i += n;
        }
    }
    return units;
}

FeatureVector featurize_text(std::string_view text, int max_seq_len, int hash_dim) {
    if (hash_dim <= 0 || (hash_dim & (hash_dim - 1)) != 0)
        throw InvariantError("hash dimension must be a power of two");
    const uint32_t mask = static_cast<uint32_t>(hash_dim - 1);

    auto units = tokenize_units(text, max_seq_len);
    std::unordered_map<uint32_t, double> counts;
    counts.reserve(units.size() * 2);
    std::string bigram;
    for (size_t i = 0; i < units.size(); ++i) {
        counts[static_cast<uint32_t>(fnv1a64(units[i])) & mask] += 1.0;
        if (i + 1 < units.size()) {
            bigram = units[i];
            bigram += '\x1f';  // joint byte so "ab"+"c" and "a"+"bc" differ
            bigram += units[i + 1];
            counts[static_cast<uint32_t>(fnv1a64(bigram)) & mask] += 1.0;
        }
    }
    FeatureVector fv;
    fv.entries.assign(counts.begin(), counts.end());
    std::sort(fv.entries.begin(), fv.entries.end());
    return fv;
}

FeatureVector featurize(std::string_view title, std::string_view abstract, int max_seq_len,
                        int hash_dim) {
    std::string text;
    text.reserve(title.size() + abstract.size() + 1);
    text.append(title);
    text += '\n';
    text.append(abstract);
    return featurize_text(text, max_seq_len, hash_dim);
}

double dot(const FeatureVector& fv, const std::vector<double>& weights) {
    double s = 0.0;
    for (const auto& [i, c] : fv.entries) s += weights[i] * c;
    return s;
}

}  // namespace textalpha
