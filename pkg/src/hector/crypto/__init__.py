"""Hash-then-encrypt primitives: SHA-256, AES-256 and the password pipeline."""

from .aes import KeySchedule, decrypt_block, encrypt_block, expand_key
from .pipeline import (
    AuthenticationError,
    CipherRecord,
    IntegrityError,
    KeyPair,
    RecordFormatError,
    decrypt_password,
    derive_keys,
    encrypt_password,
    hmac_sha256,
    pkcs7_pad,
    pkcs7_unpad,
)
from .sha256 import sha256

__all__ = [
    "AuthenticationError",
    "CipherRecord",
    "IntegrityError",
    "KeyPair",
    "KeySchedule",
    "RecordFormatError",
    "decrypt_block",
    "decrypt_password",
    "derive_keys",
    "encrypt_block",
    "encrypt_password",
    "expand_key",
    "hmac_sha256",
    "pkcs7_pad",
    "pkcs7_unpad",
    "sha256",
]
