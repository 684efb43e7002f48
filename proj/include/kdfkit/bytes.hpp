/*
* Byte strings, hex codec and error types shared by every module.
*/
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kdfkit {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

/// Output length, index width, purpose flag or similar parameter is out of range.
class InvalidParameter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Key has a length the construction cannot use (e.g. not 16 bytes for AES-128).
class InvalidKey : public InvalidParameter {
  public:
    using InvalidParameter::InvalidParameter;
};

/// Unsupported primitive configuration (sponge rate, unknown construction name).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Lowercase hex, no separators.
std::string to_hex(ByteView data);

/// Case-insensitive; rejects odd lengths and non-hex characters with InvalidParameter.
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
    return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

inline Bytes concat(std::initializer_list<ByteView> parts) {
    Bytes out;
    for (auto p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace kdfkit
