/*
* Key derivation: counter mode over HMAC-SHA256 or AES-CMAC, KMAC-based
* derivation, and the IEEE 1609.2.1 butterfly expansion function.
*/
#pragma once

#include <kdfkit/kmac.hpp>

#include <array>

namespace kdfkit {

enum class PrfChoice { HmacSha256, CmacAes128 };

/// Bytes produced per PRF call: 32 for HMAC-SHA256, 16 for AES-CMAC.
constexpr size_t prf_output_len(PrfChoice prf) {
    return prf == PrfChoice::HmacSha256 ? 32 : 16;
}

/// Layout of the per-block PRF input
///     [i]_counter || label || separator || msg || [L]_length
/// with both integers big-endian.
struct CounterKdfProfile {
    size_t counter_bytes = 4;
    size_t length_bytes = 4;
    bool length_in_bits = false;  // false: L is encoded as a byte count
    Bytes label = {'K', 'D', 'F'};
    uint8_t separator = 0x00;
};

/// The PRF input for block `index` (1-based).
Bytes counter_kdf_block_input(uint64_t index, ByteView msg, size_t out_len_bytes,
                              const CounterKdfProfile& profile = {});

/// ceil(L / B) PRF calls, concatenated and truncated to L bytes.
Bytes counter_kdf(PrfChoice prf, ByteView key, ByteView msg, size_t out_len_bytes,
                  const CounterKdfProfile& profile = {});

/// KMAC with customization string "KDF".
Bytes kmac_kdf(ByteView key, ByteView msg, size_t out_len_bits,
               KmacVariant variant = KmacVariant::Kmac128);

enum class KeyPurpose : uint8_t { Signing = 1, Encryption = 2 };

using Index32 = std::array<uint8_t, 4>;

struct IeeeKdfInput {
    Bytes key;        // AES-128 key, 16 bytes
    Index32 i_value;  // period index
    Index32 j_value;  // key index within the period
    KeyPurpose purpose = KeyPurpose::Signing;
};

/// The four leading bytes selected by the purpose flag.
struct IeeeKdfProfile {
    Index32 signing_pad = {0x00, 0x00, 0x00, 0x00};
    Index32 encryption_pad = {0x11, 0x11, 0x11, 0x11};
};

inline constexpr size_t kIeeeKdfOutputLen = 48;
using IeeeKdfOutput = std::array<uint8_t, kIeeeKdfOutputLen>;

/// pad_U || i_value || j_value || 00000000, before the counter is added.
Block128 ieee_kdf_base(const IeeeKdfInput& input, const IeeeKdfProfile& profile = {});

/// base + counter as a 128-bit big-endian integer, wrapping modulo 2^128.
Block128 add_counter(const Block128& base, uint64_t counter);

/// (AES(k, M1) ^ M1) || (AES(k, M2) ^ M2) || (AES(k, M3) ^ M3) with
/// Mi = base + i. Each block is raw single-block (ECB) encryption.
IeeeKdfOutput ieee_kdf(const IeeeKdfInput& input, const IeeeKdfProfile& profile = {});

/// Validating overload for untyped callers: i/j must be 4 bytes and the
/// purpose 1 or 2, otherwise InvalidParameter.
IeeeKdfOutput ieee_kdf(ByteView key, ByteView i_value, ByteView j_value, int purpose);

}  // namespace kdfkit
