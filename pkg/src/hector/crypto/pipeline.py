"""The hash-then-encrypt password pipeline.

A secret phrase is hashed with SHA-256 to get the AES-256 key; the
password is CBC-encrypted under a fresh random IV with PKCS#7 padding.
Two modes exist:

  - "authenticated" (default): encrypt-then-MAC.  A domain-separated MAC
    key is derived as SHA-256(enc_key || "mac") and HMAC-SHA-256 is
    computed over iv || ciphertext.  Decryption verifies the tag in
    constant time before touching the ciphertext.
  - "paper-compatible": plain hash-then-encrypt with no tag.  A wrong
    phrase surfaces as an integrity error (bad padding) or as garbage.

Key derivation is deliberately a single unsalted SHA-256 of the raw
UTF-8 phrase: the scheme's strength rests entirely on the phrase, and no
key stretching is layered on top.
"""

from __future__ import annotations

import base64
import hmac as _hmac
import json
import secrets
from dataclasses import dataclass

from .aes import BLOCK_BYTES, decrypt_block, encrypt_block, expand_key
from .sha256 import sha256

MODES = ("authenticated", "paper-compatible")

CIPHER_ID = "aes-256-cbc"
KDF_ID = "sha-256"
MAC_ID = "hmac-sha-256"

MAX_PLAINTEXT_BYTES = 1024

_HMAC_BLOCK = 64


class AuthenticationError(Exception):
    """MAC verification failed: wrong phrase or tampered record."""


class IntegrityError(Exception):
    """Decrypted padding is invalid (unauthenticated mode) or data is inconsistent."""


class RecordFormatError(ValueError):
    """A cipher record could not be parsed or violates its invariants."""


def pkcs7_pad(data: bytes) -> bytes:
    pad_len = BLOCK_BYTES - (len(data) % BLOCK_BYTES)
    return data + bytes([pad_len]) * pad_len


def pkcs7_unpad(data: bytes) -> bytes:
    if not data or len(data) % BLOCK_BYTES:
        raise IntegrityError("padded data must be a positive multiple of 16 bytes")
    pad_len = data[-1]
    if not 1 <= pad_len <= BLOCK_BYTES or data[-pad_len:] != bytes([pad_len]) * pad_len:
        raise IntegrityError("invalid padding")
    return data[:-pad_len]


def hmac_sha256(key: bytes, message: bytes) -> bytes:
    if len(key) > _HMAC_BLOCK:
        key = sha256(key)
    key = key.ljust(_HMAC_BLOCK, b"\x00")
    inner = sha256(bytes(b ^ 0x36 for b in key) + message)
    return sha256(bytes(b ^ 0x5C for b in key) + inner)


@dataclass(frozen=True)
class KeyPair:
    enc_key: bytes
    mac_key: bytes


def derive_keys(secret_phrase: str) -> KeyPair:
    """Hash the phrase into the encryption key; domain-separate the MAC key."""
    if not secret_phrase:
        raise ValueError("secret phrase must be non-empty")
    enc_key = sha256(secret_phrase.encode("utf-8"))
    return KeyPair(enc_key, sha256(enc_key + b"mac"))


@dataclass(frozen=True)
class CipherRecord:
    """One encrypted password: IV, ciphertext, optional tag, algorithm ids."""

    iv: bytes
    ciphertext: bytes
    mac: bytes | None = None
    version: int = 1
    cipher_id: str = CIPHER_ID
    kdf_id: str = KDF_ID

    def __post_init__(self):
        if len(self.iv) != BLOCK_BYTES:
            raise RecordFormatError("iv must be 16 bytes")
        if not self.ciphertext or len(self.ciphertext) % BLOCK_BYTES:
            raise RecordFormatError("ciphertext must be a positive multiple of 16 bytes")
        if self.mac is not None and len(self.mac) != 32:
            raise RecordFormatError("mac must be 32 bytes when present")

    @property
    def mac_id(self) -> str:
        return MAC_ID if self.mac is not None else "none"

    def to_wire(self) -> dict:
        wire = {
            "v": self.version,
            "cipher": self.cipher_id,
            "kdf": self.kdf_id,
            "mac": self.mac_id,
            "iv": base64.b64encode(self.iv).decode("ascii"),
            "ct": base64.b64encode(self.ciphertext).decode("ascii"),
        }
        if self.mac is not None:
            wire["tag"] = base64.b64encode(self.mac).decode("ascii")
        return wire

    def to_json(self) -> str:
        return json.dumps(self.to_wire())

    @classmethod
    def from_wire(cls, wire: dict) -> "CipherRecord":
        try:
            version = wire["v"]
            cipher_id = wire["cipher"]
            kdf_id = wire["kdf"]
            mac_id = wire["mac"]
            iv = base64.b64decode(wire["iv"], validate=True)
            ciphertext = base64.b64decode(wire["ct"], validate=True)
        except (KeyError, TypeError, ValueError) as exc:
            raise RecordFormatError(f"bad cipher record: {exc}") from exc
        if version != 1:
            raise RecordFormatError(f"unsupported record version {version!r}")
        if cipher_id != CIPHER_ID or kdf_id != KDF_ID:
            raise RecordFormatError(f"unsupported algorithms {cipher_id!r}/{kdf_id!r}")
        if mac_id == MAC_ID:
            if "tag" not in wire:
                raise RecordFormatError("mac declared but tag missing")
            try:
                mac = base64.b64decode(wire["tag"], validate=True)
            except (TypeError, ValueError) as exc:
                raise RecordFormatError(f"bad tag encoding: {exc}") from exc
        elif mac_id == "none":
            if "tag" in wire:
                raise RecordFormatError("tag present but mac declared none")
            mac = None
        else:
            raise RecordFormatError(f"unsupported mac algorithm {mac_id!r}")
        return cls(iv=iv, ciphertext=ciphertext, mac=mac, version=version)

    @classmethod
    def from_json(cls, text: str) -> "CipherRecord":
        try:
            wire = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RecordFormatError(f"bad cipher record JSON: {exc}") from exc
        if not isinstance(wire, dict):
            raise RecordFormatError("cipher record must be a JSON object")
        return cls.from_wire(wire)


def _cbc_encrypt(padded: bytes, iv: bytes, schedule) -> bytes:
    out = []
    prev = iv
    for i in range(0, len(padded), BLOCK_BYTES):
        block = bytes(x ^ y for x, y in zip(padded[i : i + BLOCK_BYTES], prev))
        prev = encrypt_block(block, schedule)
        out.append(prev)
    return b"".join(out)


def _cbc_decrypt(ciphertext: bytes, iv: bytes, schedule) -> bytes:
    out = []
    prev = iv
    for i in range(0, len(ciphertext), BLOCK_BYTES):
        block = ciphertext[i : i + BLOCK_BYTES]
        out.append(bytes(x ^ y for x, y in zip(decrypt_block(block, schedule), prev)))
        prev = block
    return b"".join(out)


def encrypt_password(plaintext: str, secret_phrase: str, mode: str = "authenticated") -> CipherRecord:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if not plaintext:
        raise ValueError("plaintext must be non-empty")
    data = plaintext.encode("utf-8")
    if len(data) > MAX_PLAINTEXT_BYTES:
        raise ValueError(f"plaintext exceeds {MAX_PLAINTEXT_BYTES} UTF-8 bytes")
    keys = derive_keys(secret_phrase)
    schedule = expand_key(keys.enc_key)
    iv = secrets.token_bytes(BLOCK_BYTES)
    ciphertext = _cbc_encrypt(pkcs7_pad(data), iv, schedule)
    mac = None
    if mode == "authenticated":
        mac = hmac_sha256(keys.mac_key, iv + ciphertext)
    return CipherRecord(iv=iv, ciphertext=ciphertext, mac=mac)


def decrypt_password(record: CipherRecord, secret_phrase: str) -> str:
    keys = derive_keys(secret_phrase)
    if record.mac is not None:
        expected = hmac_sha256(keys.mac_key, record.iv + record.ciphertext)
        if not _hmac.compare_digest(expected, record.mac):
            raise AuthenticationError("MAC mismatch: wrong phrase or tampered record")
    schedule = expand_key(keys.enc_key)
    padded = _cbc_decrypt(record.ciphertext, record.iv, schedule)
    data = pkcs7_unpad(padded)
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise IntegrityError("decrypted bytes are not valid UTF-8") from exc
