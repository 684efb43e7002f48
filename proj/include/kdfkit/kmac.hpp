/*
* cSHAKE and KMAC (SP 800-185) on top of the Keccak sponge.
*/
#pragma once

#include <kdfkit/primitives.hpp>

#include <utility>

namespace kdfkit {

// Integer encodings. Values are limited to 64 bits, far below the
// 2^2040 ceiling of the encoding itself.
Bytes left_encode(uint64_t n);
Bytes right_encode(uint64_t n);

/// Parses a left_encode()d integer at the front of `data`.
/// Returns the value and the number of bytes consumed.
std::pair<uint64_t, size_t> decode_left_encode(ByteView data);

/// left_encode(bit length of s) || s
Bytes encode_string(ByteView s);

/// left_encode(w) || x, zero-filled to a multiple of w bytes.
Bytes bytepad(ByteView x, size_t w);

/// cSHAKE at the given rate. With empty N and S this is plain SHAKE.
Bytes cshake(ByteView msg, size_t out_len_bits, ByteView function_name, ByteView customization,
             size_t rate);

enum class KmacVariant { Kmac128, Kmac256 };

constexpr size_t rate_of(KmacVariant v) {
    return v == KmacVariant::Kmac128 ? kRate128 : kRate256;
}

struct KmacParams {
    KmacVariant variant = KmacVariant::Kmac128;
    size_t out_len_bits = 256;
    Bytes customization;
};

/// bytepad(encode_string(key), r) || msg || right_encode(L): the string
/// cSHAKE consumes with N = "KMAC".
Bytes kmac_encoded_input(ByteView key, ByteView msg, const KmacParams& params);

/// Throws InvalidParameter if L is zero or not a multiple of 8.
Bytes kmac(ByteView key, ByteView msg, const KmacParams& params);

}  // namespace kdfkit
