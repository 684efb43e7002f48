#include <kdfkit/cmac.hpp>

#include <algorithm>

namespace kdfkit {

Block128 dbl(const Block128& block) {
    Block128 out;
    const uint8_t carry = block[0] >> 7;
    for (size_t i = 0; i < 15; ++i) {
        out[i] = static_cast<uint8_t>((block[i] << 1) | (block[i + 1] >> 7));
    }
    out[15] = static_cast<uint8_t>(block[15] << 1);
    out[15] ^= static_cast<uint8_t>(0x87 & (0 - carry));
    return out;
}

SubkeyPair derive_subkeys(Aes128& aes) {
    const Block128 l = aes.encrypt(Block128{});
    const Block128 k1 = dbl(l);
    return {k1, dbl(k1)};
}

SubkeyPair derive_subkeys(ByteView key) {
    Aes128 aes(key);
    return derive_subkeys(aes);
}

namespace {

Block128 pad_last(ByteView fragment, const SubkeyPair& subkeys) {
    Block128 block{};
    std::copy(fragment.begin(), fragment.end(), block.begin());
    if (fragment.size() == 16) {
        return xor_blocks(block, subkeys.k1);
    }
    block[fragment.size()] = 0x80;
    return xor_blocks(block, subkeys.k2);
}

}  // namespace

MessageBlocks split_and_pad(ByteView msg, const SubkeyPair& subkeys) {
    MessageBlocks out;
    const size_t m = msg.empty() ? 1 : (msg.size() + 15) / 16;
    out.blocks.reserve(m);
    for (size_t i = 0; i + 1 < m; ++i) {
        out.blocks.push_back(to_block(msg.subspan(16 * i, 16)));
    }
    const ByteView last = msg.subspan(16 * (m - 1));
    out.last_was_complete = last.size() == 16;
    out.blocks.push_back(pad_last(last, subkeys));
    return out;
}

Cmac::Cmac(ByteView key) : aes_(key), subkeys_(derive_subkeys(aes_)) {}

void Cmac::update(ByteView data) {
    while (!data.empty()) {
        if (buffered_ == block_len) {
            chain_ = aes_.encrypt(xor_blocks(chain_, buffer_));
            buffered_ = 0;
        }
        const size_t take = std::min(block_len - buffered_, data.size());
        std::copy_n(data.begin(), take, buffer_.begin() + static_cast<std::ptrdiff_t>(buffered_));
        buffered_ += take;
        data = data.subspan(take);
    }
}

Block128 Cmac::final() {
    const Block128 last = pad_last(ByteView(buffer_.data(), buffered_), subkeys_);
    const Block128 tag = aes_.encrypt(xor_blocks(chain_, last));
    chain_ = {};
    buffer_ = {};
    buffered_ = 0;
    return tag;
}

Block128 cmac(ByteView key, ByteView msg) {
    Cmac mac(key);
    mac.update(msg);
    return mac.final();
}

}  // namespace kdfkit
