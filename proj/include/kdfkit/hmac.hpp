/*
* HMAC (FIPS 198-1) over any hash exposing `spec`, `Digest`, update() and final().
*/
#pragma once

#include <kdfkit/primitives.hpp>

#include <algorithm>

namespace kdfkit {

inline constexpr uint8_t kHmacIpad = 0x36;
inline constexpr uint8_t kHmacOpad = 0x5C;

/// K0: the key brought to exactly block_len bytes. Long keys are hashed
/// first, short keys (including empty ones) are zero-padded on the right.
template <typename Hash>
Bytes derive_k0(ByteView key) {
    constexpr HashSpec spec = Hash::spec;
    Bytes k0(spec.block_len, 0x00);
    if (key.size() > spec.block_len) {
        Hash h;
        h.update(key);
        const auto digest = h.final();
        std::copy(digest.begin(), digest.end(), k0.begin());
    } else {
        std::copy(key.begin(), key.end(), k0.begin());
    }
    return k0;
}

/// Incremental HMAC. The key is absorbed at construction; final() returns
/// the tag and re-arms the object for another message under the same key.
template <typename Hash>
class Hmac {
  public:
    using Tag = typename Hash::Digest;
    static constexpr HashSpec spec = Hash::spec;

    explicit Hmac(ByteView key) : inner_pad_(derive_k0<Hash>(key)), outer_pad_(inner_pad_) {
        for (auto& b : inner_pad_) b ^= kHmacIpad;
        for (auto& b : outer_pad_) b ^= kHmacOpad;
        inner_.update(inner_pad_);
    }

    void update(ByteView data) { inner_.update(data); }

    Tag final() {
        const auto inner_digest = inner_.final();
        outer_.update(outer_pad_);
        outer_.update(inner_digest);
        Tag tag = outer_.final();
        inner_.update(inner_pad_);
        return tag;
    }

  private:
    Bytes inner_pad_;
    Bytes outer_pad_;
    Hash inner_;
    Hash outer_;
};

template <typename Hash>
typename Hash::Digest hmac(ByteView key, ByteView msg) {
    Hmac<Hash> mac(key);
    mac.update(msg);
    return mac.final();
}

using HmacSha256 = Hmac<Sha256>;

Digest256 hmac_sha256(ByteView key, ByteView msg);

}  // namespace kdfkit
