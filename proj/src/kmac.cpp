#include <kdfkit/kmac.hpp>

#include <string>

namespace kdfkit {

namespace {

constexpr std::string_view kKmacName = "KMAC";

Bytes minimal_big_endian(uint64_t n) {
    Bytes out;
    do {
        out.insert(out.begin(), static_cast<uint8_t>(n & 0xFF));
        n >>= 8;
    } while (n != 0);
    return out;
}

void check_output_bits(size_t bits) {
    if (bits == 0 || bits % 8 != 0) {
        throw InvalidParameter("output length must be a positive multiple of 8 bits, got " +
                               std::to_string(bits));
    }
}

Sponge cshake_sponge(ByteView function_name, ByteView customization, size_t rate) {
    if (function_name.empty() && customization.empty()) {
        return Sponge(rate, kShakePad);
    }
    Sponge sponge(rate, kCshakePad);
    sponge.absorb(bytepad(concat({encode_string(function_name), encode_string(customization)}), rate));
    return sponge;
}

}  // namespace

Bytes left_encode(uint64_t n) {
    Bytes out = minimal_big_endian(n);
    out.insert(out.begin(), static_cast<uint8_t>(out.size()));
    return out;
}

Bytes right_encode(uint64_t n) {
    Bytes out = minimal_big_endian(n);
    out.push_back(static_cast<uint8_t>(out.size()));
    return out;
}

std::pair<uint64_t, size_t> decode_left_encode(ByteView data) {
    if (data.empty() || data[0] == 0 || data[0] > 8 || data.size() < 1u + data[0]) {
        throw InvalidParameter("malformed left_encode prefix");
    }
    uint64_t value = 0;
    for (size_t i = 1; i <= data[0]; ++i) {
        value = (value << 8) | data[i];
    }
    return {value, 1u + data[0]};
}

Bytes encode_string(ByteView s) {
    return concat({left_encode(static_cast<uint64_t>(s.size()) * 8), s});
}

Bytes bytepad(ByteView x, size_t w) {
    Bytes out = concat({left_encode(w), x});
    out.resize((out.size() + w - 1) / w * w, 0x00);
    return out;
}

Bytes cshake(ByteView msg, size_t out_len_bits, ByteView function_name, ByteView customization,
             size_t rate) {
    check_output_bits(out_len_bits);
    Sponge sponge = cshake_sponge(function_name, customization, rate);
    sponge.absorb(msg);
    return sponge.squeeze(out_len_bits / 8);
}

Bytes kmac_encoded_input(ByteView key, ByteView msg, const KmacParams& params) {
    return concat({bytepad(encode_string(key), rate_of(params.variant)), msg,
                   right_encode(params.out_len_bits)});
}

Bytes kmac(ByteView key, ByteView msg, const KmacParams& params) {
    check_output_bits(params.out_len_bits);
    const size_t rate = rate_of(params.variant);
    // Same bytes as cshake(kmac_encoded_input(...)), absorbed piecewise so
    // the message is never copied.
    Sponge sponge = cshake_sponge(as_bytes(kKmacName), params.customization, rate);
    sponge.absorb(bytepad(encode_string(key), rate));
    sponge.absorb(msg);
    sponge.absorb(right_encode(params.out_len_bits));
    return sponge.squeeze(params.out_len_bits / 8);
}

}  // namespace kdfkit
