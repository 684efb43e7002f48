/*
* Test-only reference computations. Each one re-derives a construction from
* its definition using only the primitive adapters (or OpenSSL), never the
* construction code it is compared against.
*/
#pragma once

#include <kdfkit/primitives.hpp>

#include <string>

namespace kdfkit::reference {

/// AES-CMAC with every block materialized and folded one at a time.
Bytes cmac_by_blocks(ByteView key, ByteView msg);

/// dbl via 128-bit integer arithmetic.
Block128 dbl_u128(const Block128& x);

enum class Prf { Hmac, Cmac };

/// PRF input i || "KDF" || 0x00 || msg || L, 32-bit big-endian i and L.
Bytes counter_block_input(uint32_t i, ByteView msg, uint32_t length);

/// Concatenated PRF(key, input_i) truncated to L. `use_openssl` swaps the
/// in-repo HMAC/CMAC for OpenSSL's EVP_MAC.
Bytes counter_kdf_by_hand(Prf prf, ByteView key, ByteView msg, size_t length, bool use_openssl);

/// Three AES-then-xor blocks over (pad || i || j || 0) + 1, + 2, + 3.
Bytes ieee_kdf_unrolled(ByteView key, ByteView i_value, ByteView j_value, int purpose);

/// Criterion-sized sweeps. Return an empty string on success, else the first mismatch.
std::string counter_kdf_equivalence(size_t max_len, size_t trials, uint64_t seed);
std::string ieee_kdf_grid_equivalence(uint64_t seed);

}  // namespace kdfkit::reference
