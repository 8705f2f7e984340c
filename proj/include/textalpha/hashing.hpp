#pragma once

#include <cstdint>
#include <string_view>

namespace textalpha {

// FNV-1a, 64-bit. Used for token hashing, data fingerprints and the
// run manifest; fixed constants keep it stable across platforms.
inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 14695981039346656037ULL) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace textalpha
