#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace textalpha {

constexpr int kDefaultHashDim = 32768;
constexpr int kDefaultMaxSeqLen = 500;

// Sparse hashed token counts, indices sorted ascending.
struct FeatureVector {
    std::vector<std::pair<uint32_t, double>> entries;

    bool empty() const { return entries.empty(); }
    double total_count() const;
};

// Tokenization: the text is cut into units — each non-ASCII codepoint is a
// unit, maximal whitespace-free ASCII runs are units. The unit stream is
// truncated to max_seq_len, then hashed unigrams plus adjacent-unit bigrams
// are counted.
FeatureVector featurize_text(std::string_view text, int max_seq_len = kDefaultMaxSeqLen,
                             int hash_dim = kDefaultHashDim);

FeatureVector featurize(std::string_view title, std::string_view abstract,
                        int max_seq_len = kDefaultMaxSeqLen, int hash_dim = kDefaultHashDim);

// Exposed for tests: the truncated unit stream.
std::vector<std::string> tokenize_units(std::string_view text, int max_seq_len);

double dot(const FeatureVector& fv, const std::vector<double>& weights);

}  // namespace textalpha
