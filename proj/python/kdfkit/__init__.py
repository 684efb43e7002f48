"""HMAC, AES-CMAC, KMAC and the key derivation functions built on them."""

from ._core import (
    BenchStats,
    ConfigError,
    InvalidParameter,
    aes_encrypt_block,
    cmac,
    cmac_subkeys,
    counter_kdf,
    cshake,
    hmac_sha256,
    ieee_kdf,
    kmac,
    kmac_kdf,
    run_bench,
    selftest,
    sha256,
    sponge,
    summarize,
)

__all__ = [
    "BenchStats",
    "ConfigError",
    "InvalidParameter",
    "aes_encrypt_block",
    "cmac",
    "cmac_subkeys",
    "counter_kdf",
    "cshake",
    "hmac_sha256",
    "ieee_kdf",
    "kmac",
    "kmac_kdf",
    "run_bench",
    "selftest",
    "sha256",
    "sponge",
    "summarize",
]
