"""AES-256 block cipher, implemented from the FIPS-197 description.

256-bit keys, 14 rounds, 128-bit blocks.  The state is kept as a flat
16-byte list in input order, so column c occupies bytes 4c..4c+3 and row
r the bytes r, r+4, r+8, r+12.  Validated against the Appendix C.3
known-answer vector in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

# fmt: off
_SBOX = bytes((
    0x63, 0x7c, 0x77, 0x7b, 0xf2, 0x6b, 0x6f, 0xc5, 0x30, 0x01, 0x67, 0x2b, 0xfe, 0xd7, 0xab, 0x76,
    0xca, 0x82, 0xc9, 0x7d, 0xfa, 0x59, 0x47, 0xf0, 0xad, 0xd4, 0xa2, 0xaf, 0x9c, 0xa4, 0x72, 0xc0,
    0xb7, 0xfd, 0x93, 0x26, 0x36, 0x3f, 0xf7, 0xcc, 0x34, 0xa5, 0xe5, 0xf1, 0x71, 0xd8, 0x31, 0x15,
    0x04, 0xc7, 0x23, 0xc3, 0x18, 0x96, 0x05, 0x9a, 0x07, 0x12, 0x80, 0xe2, 0xeb, 0x27, 0xb2, 0x75,
    0x09, 0x83, 0x2c, 0x1a, 0x1b, 0x6e, 0x5a, 0xa0, 0x52, 0x3b, 0xd6, 0xb3, 0x29, 0xe3, 0x2f, 0x84,
    0x53, 0xd1, 0x00, 0xed, 0x20, 0xfc, 0xb1, 0x5b, 0x6a, 0xcb, 0xbe, 0x39, 0x4a, 0x4c, 0x58, 0xcf,
    0xd0, 0xef, 0xaa, 0xfb, 0x43, 0x4d, 0x33, 0x85, 0x45, 0xf9, 0x02, 0x7f, 0x50, 0x3c, 0x9f, 0xa8,
    0x51, 0xa3, 0x40, 0x8f, 0x92, 0x9d, 0x38, 0xf5, 0xbc, 0xb6, 0xda, 0x21, 0x10, 0xff, 0xf3, 0xd2,
    0xcd, 0x0c, 0x13, 0xec, 0x5f, 0x97, 0x44, 0x17, 0xc4, 0xa7, 0x7e, 0x3d, 0x64, 0x5d, 0x19, 0x73,
    0x60, 0x81, 0x4f, 0xdc, 0x22, 0x2a, 0x90, 0x88, 0x46, 0xee, 0xb8, 0x14, 0xde, 0x5e, 0x0b, 0xdb,
    0xe0, 0x32, 0x3a, 0x0a, 0x49, 0x06, 0x24, 0x5c, 0xc2, 0xd3, 0xac, 0x62, 0x91, 0x95, 0xe4, 0x79,
    0xe7, 0xc8, 0x37, 0x6d, 0x8d, 0xd5, 0x4e, 0xa9, 0x6c, 0x56, 0xf4, 0xea, 0x65, 0x7a, 0xae, 0x08,
    0xba, 0x78, 0x25, 0x2e, 0x1c, 0xa6, 0xb4, 0xc6, 0xe8, 0xdd, 0x74, 0x1f, 0x4b, 0xbd, 0x8b, 0x8a,
    0x70, 0x3e, 0xb5, 0x66, 0x48, 0x03, 0xf6, 0x0e, 0x61, 0x35, 0x57, 0xb9, 0x86, 0xc1, 0x1d, 0x9e,
    0xe1, 0xf8, 0x98, 0x11, 0x69, 0xd9, 0x8e, 0x94, 0x9b, 0x1e, 0x87, 0xe9, 0xce, 0x55, 0x28, 0xdf,
    0x8c, 0xa1, 0x89, 0x0d, 0xbf, 0xe6, 0x42, 0x68, 0x41, 0x99, 0x2d, 0x0f, 0xb0, 0x54, 0xbb, 0x16,
))
# fmt: on

_INV_SBOX = bytearray(256)
for _i, _v in enumerate(_SBOX):
    _INV_SBOX[_v] = _i
_INV_SBOX = bytes(_INV_SBOX)


def _gf_mul(a: int, b: int) -> int:
    p = 0
    for _ in range(8):
        if b & 1:
            p ^= a
        carry = a & 0x80
        a = (a << 1) & 0xFF
        if carry:
            a ^= 0x1B
        b >>= 1
    return p


# Per-constant multiplication tables for MixColumns and its inverse.
_MUL2 = bytes(_gf_mul(2, x) for x in range(256))
_MUL3 = bytes(_gf_mul(3, x) for x in range(256))
_MUL9 = bytes(_gf_mul(9, x) for x in range(256))
_MUL11 = bytes(_gf_mul(11, x) for x in range(256))
_MUL13 = bytes(_gf_mul(13, x) for x in range(256))
_MUL14 = bytes(_gf_mul(14, x) for x in range(256))

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40)

NUM_ROUNDS = 14
KEY_BYTES = 32
BLOCK_BYTES = 16


@dataclass(frozen=True)
class KeySchedule:
    """Expanded AES-256 key: the initial round key plus one per round."""

    round_keys: tuple[bytes, ...]

    def __post_init__(self):
        if len(self.round_keys) != NUM_ROUNDS + 1:
            raise ValueError(f"expected {NUM_ROUNDS + 1} round keys")
        if any(len(rk) != BLOCK_BYTES for rk in self.round_keys):
            raise ValueError("round keys must be 16 bytes each")


def expand_key(key: bytes) -> KeySchedule:
    """FIPS-197 key expansion: 32-byte key to 60 words / 15 round keys."""
    if len(key) != KEY_BYTES:
        raise ValueError(f"AES-256 key must be {KEY_BYTES} bytes, got {len(key)}")
    words = [key[4 * i : 4 * i + 4] for i in range(8)]
    for i in range(8, 4 * (NUM_ROUNDS + 1)):
        temp = words[i - 1]
        if i % 8 == 0:
            rotated = temp[1:] + temp[:1]
            temp = bytes(_SBOX[b] for b in rotated)
            temp = bytes((temp[0] ^ _RCON[i // 8 - 1], temp[1], temp[2], temp[3]))
        elif i % 8 == 4:
            temp = bytes(_SBOX[b] for b in temp)
        words.append(bytes(x ^ y for x, y in zip(words[i - 8], temp)))
    round_keys = tuple(b"".join(words[4 * r : 4 * r + 4]) for r in range(NUM_ROUNDS + 1))
    return KeySchedule(round_keys)


def _shift_rows(s: list[int]) -> list[int]:
    # Row r rotates left by r; element (r, c) lives at flat index r + 4c.
    return [s[(i + 4 * (i % 4)) % 16] for i in range(16)]


def _inv_shift_rows(s: list[int]) -> list[int]:
    return [s[(i - 4 * (i % 4)) % 16] for i in range(16)]


def _mix_columns(s: list[int]) -> list[int]:
    out = [0] * 16
    for c in range(0, 16, 4):
        a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
        out[c] = _MUL2[a0] ^ _MUL3[a1] ^ a2 ^ a3
        out[c + 1] = a0 ^ _MUL2[a1] ^ _MUL3[a2] ^ a3
        out[c + 2] = a0 ^ a1 ^ _MUL2[a2] ^ _MUL3[a3]
        out[c + 3] = _MUL3[a0] ^ a1 ^ a2 ^ _MUL2[a3]
    return out


def _inv_mix_columns(s: list[int]) -> list[int]:
    out = [0] * 16
    for c in range(0, 16, 4):
        a0, a1, a2, a3 = s[c], s[c + 1], s[c + 2], s[c + 3]
        out[c] = _MUL14[a0] ^ _MUL11[a1] ^ _MUL13[a2] ^ _MUL9[a3]
        out[c + 1] = _MUL9[a0] ^ _MUL14[a1] ^ _MUL11[a2] ^ _MUL13[a3]
        out[c + 2] = _MUL13[a0] ^ _MUL9[a1] ^ _MUL14[a2] ^ _MUL11[a3]
        out[c + 3] = _MUL11[a0] ^ _MUL13[a1] ^ _MUL9[a2] ^ _MUL14[a3]
    return out


def _check_block(block: bytes) -> None:
    if len(block) != BLOCK_BYTES:
        raise ValueError(f"block must be {BLOCK_BYTES} bytes, got {len(block)}")


def encrypt_block(block: bytes, schedule: KeySchedule) -> bytes:
    _check_block(block)
    rk = schedule.round_keys
    s = [b ^ k for b, k in zip(block, rk[0])]
    for rnd in range(1, NUM_ROUNDS):
        s = _mix_columns(_shift_rows([_SBOX[b] for b in s]))
        s = [b ^ k for b, k in zip(s, rk[rnd])]
    s = _shift_rows([_SBOX[b] for b in s])
    return bytes(b ^ k for b, k in zip(s, rk[NUM_ROUNDS]))


def decrypt_block(block: bytes, schedule: KeySchedule) -> bytes:
    _check_block(block)
    rk = schedule.round_keys
    s = [b ^ k for b, k in zip(block, rk[NUM_ROUNDS])]
    for rnd in range(NUM_ROUNDS - 1, 0, -1):
        s = [_INV_SBOX[b] for b in _inv_shift_rows(s)]
        s = [b ^ k for b, k in zip(s, rk[rnd])]
        s = _inv_mix_columns(s)
    s = [_INV_SBOX[b] for b in _inv_shift_rows(s)]
    return bytes(b ^ k for b, k in zip(s, rk[0]))
