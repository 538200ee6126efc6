"""SHA-256, implemented from the FIPS 180-2 description.

Plain-integer implementation validated against the published
known-answer vectors; see the test suite for the B.1/B.2 digests.
"""

from __future__ import annotations

# fmt: off
_H0 = (
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19,
)

_K = (
    0x428A2F98, 0x71374491, 0xB5C0FBCF, 0xE9B5DBA5, 0x3956C25B, 0x59F111F1, 0x923F82A4, 0xAB1C5ED5,
    0xD807AA98, 0x12835B01, 0x243185BE, 0x550C7DC3, 0x72BE5D74, 0x80DEB1FE, 0x9BDC06A7, 0xC19BF174,
    0xE49B69C1, 0xEFBE4786, 0x0FC19DC6, 0x240CA1CC, 0x2DE92C6F, 0x4A7484AA, 0x5CB0A9DC, 0x76F988DA,
    0x983E5152, 0xA831C66D, 0xB00327C8, 0xBF597FC7, 0xC6E00BF3, 0xD5A79147, 0x06CA6351, 0x14292967,
    0x27B70A85, 0x2E1B2138, 0x4D2C6DFC, 0x53380D13, 0x650A7354, 0x766A0ABB, 0x81C2C92E, 0x92722C85,
    0xA2BFE8A1, 0xA81A664B, 0xC24B8B70, 0xC76C51A3, 0xD192E819, 0xD6990624, 0xF40E3585, 0x106AA070,
    0x19A4C116, 0x1E376C08, 0x2748774C, 0x34B0BCB5, 0x391C0CB3, 0x4ED8AA4A, 0x5B9CCA4F, 0x682E6FF3,
    0x748F82EE, 0x78A5636F, 0x84C87814, 0x8CC70208, 0x90BEFFFA, 0xA4506CEB, 0xBEF9A3F7, 0xC67178F2,
)
# fmt: on

_MASK32 = 0xFFFFFFFF


def _pad(length: int) -> bytes:
    # 0x80, zeros to 56 mod 64, then the bit length as a 64-bit integer.
    zeros = (55 - length) % 64
    return b"\x80" + b"\x00" * zeros + (8 * length).to_bytes(8, "big")


def _compress(state: list[int], block: bytes) -> list[int]:
    w = list(int.from_bytes(block[i : i + 4], "big") for i in range(0, 64, 4))
    for i in range(16, 64):
        x = w[i - 15]
        s0 = ((x >> 7) | (x << 25)) & _MASK32 ^ ((x >> 18) | (x << 14)) & _MASK32 ^ (x >> 3)
        x = w[i - 2]
        s1 = ((x >> 17) | (x << 15)) & _MASK32 ^ ((x >> 19) | (x << 13)) & _MASK32 ^ (x >> 10)
        w.append((w[i - 16] + s0 + w[i - 7] + s1) & _MASK32)

    a, b, c, d, e, f, g, h = state
    for i in range(64):
        big_s1 = ((e >> 6) | (e << 26)) & _MASK32 ^ ((e >> 11) | (e << 21)) & _MASK32 ^ ((e >> 25) | (e << 7)) & _MASK32
        choose = (e & f) ^ (~e & g)
        temp1 = (h + big_s1 + choose + _K[i] + w[i]) & _MASK32
        big_s0 = ((a >> 2) | (a << 30)) & _MASK32 ^ ((a >> 13) | (a << 19)) & _MASK32 ^ ((a >> 22) | (a << 10)) & _MASK32
        majority = (a & b) ^ (a & c) ^ (b & c)
        temp2 = (big_s0 + majority) & _MASK32
        a, b, c, d, e, f, g, h = (temp1 + temp2) & _MASK32, a, b, c, (d + temp1) & _MASK32, e, f, g

    return [(x + y) & _MASK32 for x, y in zip(state, (a, b, c, d, e, f, g, h))]


def sha256(message: bytes) -> bytes:
    """32-byte SHA-256 digest of an arbitrary-length message."""
    padded = bytes(message) + _pad(len(message))
    state = list(_H0)
    for i in range(0, len(padded), 64):
        state = _compress(state, padded[i : i + 64])
    return b"".join(word.to_bytes(4, "big") for word in state)
