/*
* Primitive adapters: AES-128 forward cipher, SHA-256 and the Keccak-f[1600]
* sponge. AES and SHA-256 are delegated to OpenSSL libcrypto; the sponge
* (padding, absorb, squeeze) and the permutation live here.
*/
#pragma once

#include <kdfkit/bytes.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>

namespace kdfkit {

using Block128 = std::array<uint8_t, 16>;

inline Block128 xor_blocks(const Block128& a, const Block128& b) {
    Block128 out;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] = a[i] ^ b[i];
    }
    return out;
}

/// Copies exactly 16 bytes; throws InvalidParameter on any other length.
Block128 to_block(ByteView data);

/// AES-128 with the key schedule computed once. Single owner: encrypt()
/// mutates the underlying cipher context, so one instance must not be used
/// from two threads at the same time.
class Aes128 {
  public:
    static constexpr size_t key_length = 16;

    explicit Aes128(ByteView key);
    ~Aes128();
    Aes128(Aes128&&) noexcept;
    Aes128& operator=(Aes128&&) noexcept;
    Aes128(const Aes128&) = delete;
    Aes128& operator=(const Aes128&) = delete;

    Block128 encrypt(const Block128& plaintext);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Block128 aes_encrypt_block(ByteView key, const Block128& plaintext);

/// Input block size and digest size of a hash function, in bytes.
struct HashSpec {
    size_t block_len;
    size_t digest_len;
};

using Digest256 = std::array<uint8_t, 32>;

/// Incremental SHA-256. Reusable after final().
class Sha256 {
  public:
    static constexpr HashSpec spec{64, 32};
    using Digest = Digest256;

    Sha256();
    ~Sha256();
    Sha256(Sha256&&) noexcept;
    Sha256& operator=(Sha256&&) noexcept;
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(ByteView data);
    Digest final();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Digest256 sha256(ByteView data);

/// The Keccak-f[1600] permutation over 25 little-endian 64-bit lanes.
void keccak_f1600(std::array<uint64_t, 25>& lanes);

inline constexpr size_t kRate128 = 168;  // SHAKE128 / cSHAKE128 / KMAC128
inline constexpr size_t kRate256 = 136;  // SHAKE256 / cSHAKE256 / KMAC256

inline constexpr uint8_t kShakePad = 0x1F;
inline constexpr uint8_t kCshakePad = 0x04;

/// Keccak sponge with pad10*1 and a multi-rate domain byte. Absorbs until
/// the first squeeze, after which further absorb() calls throw.
class Sponge {
  public:
    Sponge(size_t rate, uint8_t domain_pad);

    void absorb(ByteView data);
    void squeeze(std::span<uint8_t> out);
    Bytes squeeze(size_t out_len);

    size_t rate() const { return rate_; }

  private:
    void finish_absorb();
    uint8_t state_byte(size_t pos) const;
    void xor_state_byte(size_t pos, uint8_t value);

    std::array<uint64_t, 25> lanes_{};
    size_t rate_;
    size_t offset_ = 0;  // position within the current rate block
    uint8_t domain_pad_;
    bool squeezing_ = false;
};

Bytes sponge_absorb_squeeze(ByteView input, size_t rate, uint8_t domain_pad, size_t out_len);

}  // namespace kdfkit
