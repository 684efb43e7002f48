#pragma once

#include <kdfkit/bytes.hpp>

#include <random>
#include <string>

namespace kdfkit::test {

inline Bytes hex(std::string_view s) {
    return from_hex(s);
}

inline Bytes text(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

template <typename Container>
std::string hexof(const Container& c) {
    return to_hex(ByteView(c.data(), c.size()));
}

inline Bytes random_bytes(std::mt19937_64& rng, size_t n) {
    Bytes out(n);
    for (auto& b : out) {
        b = static_cast<uint8_t>(rng());
    }
    return out;
}

inline size_t random_size(std::mt19937_64& rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

}  // namespace kdfkit::test
