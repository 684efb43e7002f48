#include <kdfkit/primitives.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <string>

namespace kdfkit {

Block128 to_block(ByteView data) {
    if (data.size() != 16) {
        throw InvalidParameter("expected a 16-byte block, got " + std::to_string(data.size()));
    }
    Block128 out;
    std::copy(data.begin(), data.end(), out.begin());
    return out;
}

// ---------------------------------------------------------------- AES-128

struct Aes128::Impl {
    struct CtxFree {
        void operator()(EVP_CIPHER_CTX* ctx) const { EVP_CIPHER_CTX_free(ctx); }
    };
    std::unique_ptr<EVP_CIPHER_CTX, CtxFree> ctx{EVP_CIPHER_CTX_new()};
};

Aes128::Aes128(ByteView key) : impl_(std::make_unique<Impl>()) {
    if (key.size() != key_length) {
        throw InvalidKey("AES-128 key must be 16 bytes, got " + std::to_string(key.size()));
    }
    if (!impl_->ctx ||
        EVP_EncryptInit_ex(impl_->ctx.get(), EVP_aes_128_ecb(), nullptr, key.data(), nullptr) != 1) {
        throw std::runtime_error("OpenSSL AES-128 initialisation failed");
    }
    EVP_CIPHER_CTX_set_padding(impl_->ctx.get(), 0);
}

Aes128::~Aes128() = default;
Aes128::Aes128(Aes128&&) noexcept = default;
Aes128& Aes128::operator=(Aes128&&) noexcept = default;

Block128 Aes128::encrypt(const Block128& plaintext) {
    Block128 out;
    int written = 0;
    if (EVP_EncryptUpdate(impl_->ctx.get(), out.data(), &written, plaintext.data(),
                          static_cast<int>(plaintext.size())) != 1 ||
        written != 16) {
        throw std::runtime_error("OpenSSL AES-128 block encryption failed");
    }
    return out;
}

Block128 aes_encrypt_block(ByteView key, const Block128& plaintext) {
    Aes128 aes(key);
    return aes.encrypt(plaintext);
}

// ---------------------------------------------------------------- SHA-256

struct Sha256::Impl {
    struct CtxFree {
        void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
    };
    std::unique_ptr<EVP_MD_CTX, CtxFree> ctx{EVP_MD_CTX_new()};

    void reset() {
        if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
            throw std::runtime_error("OpenSSL SHA-256 initialisation failed");
        }
    }
};

Sha256::Sha256() : impl_(std::make_unique<Impl>()) {
    impl_->reset();
}

Sha256::~Sha256() = default;
Sha256::Sha256(Sha256&&) noexcept = default;
Sha256& Sha256::operator=(Sha256&&) noexcept = default;

void Sha256::update(ByteView data) {
    if (!data.empty() && EVP_DigestUpdate(impl_->ctx.get(), data.data(), data.size()) != 1) {
        throw std::runtime_error("OpenSSL SHA-256 update failed");
    }
}

Digest256 Sha256::final() {
    Digest256 out;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(impl_->ctx.get(), out.data(), &len) != 1 || len != out.size()) {
        throw std::runtime_error("OpenSSL SHA-256 finalisation failed");
    }
    impl_->reset();
    return out;
}

Digest256 sha256(ByteView data) {
    Sha256 h;
    h.update(data);
    return h.final();
}

// ---------------------------------------------------------------- Keccak

namespace {

constexpr std::array<uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// rho offsets and pi destinations, walked along the (x, y) -> (y, 2x + 3y) cycle
constexpr std::array<unsigned, 24> kRho = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                           27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
constexpr std::array<unsigned, 24> kPi = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                          15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

constexpr uint64_t rotl(uint64_t x, unsigned n) {
    return (x << n) | (x >> ((64 - n) & 63));
}

}  // namespace

void keccak_f1600(std::array<uint64_t, 25>& a) {
    for (uint64_t rc : kRoundConstants) {
        // theta
        std::array<uint64_t, 5> c;
        for (size_t x = 0; x < 5; ++x) {
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        }
        for (size_t x = 0; x < 5; ++x) {
            const uint64_t d = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
            for (size_t y = 0; y < 25; y += 5) {
                a[y + x] ^= d;
            }
        }
        // rho + pi
        uint64_t carry = a[1];
        for (size_t i = 0; i < 24; ++i) {
            const uint64_t next = a[kPi[i]];
            a[kPi[i]] = rotl(carry, kRho[i]);
            carry = next;
        }
        // chi
        for (size_t y = 0; y < 25; y += 5) {
            std::array<uint64_t, 5> row;
            for (size_t x = 0; x < 5; ++x) {
                row[x] = a[y + x];
            }
            for (size_t x = 0; x < 5; ++x) {
                a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
            }
        }
        // iota
        a[0] ^= rc;
    }
}

Sponge::Sponge(size_t rate, uint8_t domain_pad) : rate_(rate), domain_pad_(domain_pad) {
    if (rate != kRate128 && rate != kRate256) {
        throw ConfigError("sponge rate must be 168 or 136 bytes, got " + std::to_string(rate));
    }
}

uint8_t Sponge::state_byte(size_t pos) const {
    return static_cast<uint8_t>(lanes_[pos / 8] >> (8 * (pos % 8)));
}

void Sponge::xor_state_byte(size_t pos, uint8_t value) {
    lanes_[pos / 8] ^= static_cast<uint64_t>(value) << (8 * (pos % 8));
}

void Sponge::absorb(ByteView data) {
    if (squeezing_) {
        throw std::logic_error("sponge already switched to squeezing");
    }
    for (uint8_t b : data) {
        xor_state_byte(offset_, b);
        if (++offset_ == rate_) {
            keccak_f1600(lanes_);
            offset_ = 0;
        }
    }
}

void Sponge::finish_absorb() {
    xor_state_byte(offset_, domain_pad_);
    xor_state_byte(rate_ - 1, 0x80);
    keccak_f1600(lanes_);
    offset_ = 0;
    squeezing_ = true;
}

void Sponge::squeeze(std::span<uint8_t> out) {
    if (!squeezing_) {
        finish_absorb();
    }
    for (uint8_t& b : out) {
        if (offset_ == rate_) {
            keccak_f1600(lanes_);
            offset_ = 0;
        }
        b = state_byte(offset_++);
    }
}

Bytes Sponge::squeeze(size_t out_len) {
    Bytes out(out_len);
    squeeze(std::span<uint8_t>(out));
    return out;
}

Bytes sponge_absorb_squeeze(ByteView input, size_t rate, uint8_t domain_pad, size_t out_len) {
    if (out_len == 0) {
        throw InvalidParameter("sponge output length must be positive");
    }
    Sponge sponge(rate, domain_pad);
    sponge.absorb(input);
    return sponge.squeeze(out_len);
}

}  // namespace kdfkit
