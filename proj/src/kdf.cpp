#include <kdfkit/kdf.hpp>

#include <kdfkit/cmac.hpp>
#include <kdfkit/hmac.hpp>

#include <algorithm>
#include <string>

namespace kdfkit {

namespace {

void append_be(Bytes& out, uint64_t value, size_t width) {
    if (width < 8 && (value >> (8 * width)) != 0) {
        throw InvalidParameter("value " + std::to_string(value) + " does not fit in " +
                               std::to_string(width) + " bytes");
    }
    for (size_t i = width; i-- > 0;) {
        out.push_back(i < 8 ? static_cast<uint8_t>(value >> (8 * i)) : 0);
    }
}

template <typename Prf>
Bytes run_counter_mode(Prf& prf, size_t block_len, ByteView msg, size_t out_len,
                       const CounterKdfProfile& profile) {
    const size_t n = (out_len + block_len - 1) / block_len;
    Bytes out;
    out.reserve(n * block_len);
    for (size_t i = 1; i <= n; ++i) {
        prf.update(counter_kdf_block_input(i, msg, out_len, profile));
        const auto block = prf.final();
        out.insert(out.end(), block.begin(), block.end());
    }
    out.resize(out_len);
    return out;
}

}  // namespace

Bytes counter_kdf_block_input(uint64_t index, ByteView msg, size_t out_len_bytes,
                              const CounterKdfProfile& profile) {
    Bytes in;
    in.reserve(profile.counter_bytes + profile.label.size() + 1 + msg.size() + profile.length_bytes);
    append_be(in, index, profile.counter_bytes);
    in.insert(in.end(), profile.label.begin(), profile.label.end());
    in.push_back(profile.separator);
    in.insert(in.end(), msg.begin(), msg.end());
    append_be(in, profile.length_in_bits ? uint64_t{out_len_bytes} * 8 : out_len_bytes,
              profile.length_bytes);
    return in;
}

Bytes counter_kdf(PrfChoice prf, ByteView key, ByteView msg, size_t out_len_bytes,
                  const CounterKdfProfile& profile) {
    if (out_len_bytes == 0) {
        throw InvalidParameter("counter KDF output length must be at least 1 byte");
    }
    if (prf == PrfChoice::HmacSha256) {
        HmacSha256 mac(key);
        return run_counter_mode(mac, prf_output_len(prf), msg, out_len_bytes, profile);
    }
    Cmac mac(key);
    return run_counter_mode(mac, prf_output_len(prf), msg, out_len_bytes, profile);
}

Bytes kmac_kdf(ByteView key, ByteView msg, size_t out_len_bits, KmacVariant variant) {
    return kmac(key, msg, KmacParams{variant, out_len_bits, Bytes{'K', 'D', 'F'}});
}

Block128 ieee_kdf_base(const IeeeKdfInput& input, const IeeeKdfProfile& profile) {
    const Index32& pad =
        input.purpose == KeyPurpose::Signing ? profile.signing_pad : profile.encryption_pad;
    Block128 base{};
    std::copy(pad.begin(), pad.end(), base.begin());
    std::copy(input.i_value.begin(), input.i_value.end(), base.begin() + 4);
    std::copy(input.j_value.begin(), input.j_value.end(), base.begin() + 8);
    return base;
}

Block128 add_counter(const Block128& base, uint64_t counter) {
    Block128 out = base;
    unsigned carry = 0;
    for (size_t i = 16; i-- > 0;) {
        const size_t k = 15 - i;
        const unsigned addend = k < 8 ? static_cast<uint8_t>(counter >> (8 * k)) : 0;
        const unsigned sum = out[i] + addend + carry;
        out[i] = static_cast<uint8_t>(sum);
        carry = sum >> 8;
    }
    return out;
}

IeeeKdfOutput ieee_kdf(const IeeeKdfInput& input, const IeeeKdfProfile& profile) {
    if (input.purpose != KeyPurpose::Signing && input.purpose != KeyPurpose::Encryption) {
        throw InvalidParameter("purpose flag must be 1 (signing) or 2 (encryption)");
    }
    Aes128 aes(input.key);
    const Block128 base = ieee_kdf_base(input, profile);
    IeeeKdfOutput out;
    for (uint64_t i = 1; i <= 3; ++i) {
        const Block128 m = add_counter(base, i);
        const Block128 block = xor_blocks(aes.encrypt(m), m);
        std::copy(block.begin(), block.end(), out.begin() + static_cast<std::ptrdiff_t>(16 * (i - 1)));
    }
    return out;
}

IeeeKdfOutput ieee_kdf(ByteView key, ByteView i_value, ByteView j_value, int purpose) {
    if (i_value.size() != 4 || j_value.size() != 4) {
        throw InvalidParameter("i and j values must be exactly 4 bytes");
    }
    if (purpose != 1 && purpose != 2) {
        throw InvalidParameter("purpose flag must be 1 (signing) or 2 (encryption), got " +
                               std::to_string(purpose));
    }
    if (key.size() != Aes128::key_length) {
        throw InvalidKey("IEEE 1609.2.1 KDF key must be 16 bytes, got " + std::to_string(key.size()));
    }
    IeeeKdfInput input;
    input.key.assign(key.begin(), key.end());
    std::copy(i_value.begin(), i_value.end(), input.i_value.begin());
    std::copy(j_value.begin(), j_value.end(), input.j_value.begin());
    input.purpose = static_cast<KeyPurpose>(purpose);
    return ieee_kdf(input, {});
}

}  // namespace kdfkit
