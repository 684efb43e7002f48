/*
* AES-CMAC (SP 800-38B / RFC 4493).
*/
#pragma once

#include <kdfkit/primitives.hpp>

#include <vector>

namespace kdfkit {

/// Multiplication by x in GF(2^128): shift left one bit, and if the bit
/// shifted out was set, xor 0x87 into the last byte.
Block128 dbl(const Block128& block);

struct SubkeyPair {
    Block128 k1;
    Block128 k2;
};

/// K1 = dbl(AES(k, 0^128)), K2 = dbl(K1).
SubkeyPair derive_subkeys(ByteView key);
SubkeyPair derive_subkeys(Aes128& aes);

/// The message cut into 16-byte blocks with the last block already
/// padded (0x80 then zeros, when short) and masked with K1 or K2.
/// An empty message yields one block.
struct MessageBlocks {
    std::vector<Block128> blocks;
    bool last_was_complete = false;
};

MessageBlocks split_and_pad(ByteView msg, const SubkeyPair& subkeys);

/// Streaming AES-CMAC. Keeps the final (possibly complete) block buffered
/// until final(), since whether it takes K1 or K2 depends on what follows.
class Cmac {
  public:
    static constexpr size_t block_len = 16;

    explicit Cmac(ByteView key);

    void update(ByteView data);
    Block128 final();

  private:
    Aes128 aes_;
    SubkeyPair subkeys_;
    Block128 chain_{};
    Block128 buffer_{};
    size_t buffered_ = 0;
};

Block128 cmac(ByteView key, ByteView msg);

}  // namespace kdfkit
