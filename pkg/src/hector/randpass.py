"""Random password generation from user-selected character classes.

The default draw source is the operating system CSPRNG via the secrets
module, which already performs rejection sampling, so indices into the
character set carry no modulo bias.  A seeded mode exists solely so tests
and docs can pin concrete outputs; it runs SplitMix64 with the same
rejection-sampling index draw and is a pure function of (seed, length,
charset).  Never use the seeded mode for real passwords.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass

from .alphabet import DIGITS, LOWER, SYMBOLS, UPPER

MAX_LENGTH = 64

# Class flags in their fixed concatenation order.
_CLASSES = (
    ("lower", LOWER),
    ("upper", UPPER),
    ("digits", DIGITS),
    ("symbols", SYMBOLS),
)

# CLI/API spellings of the class flags.
CLASS_CODES = {"a": "lower", "A": "upper", "0": "digits", "@": "symbols"}


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class CharClassSelection:
    lower: bool = False
    upper: bool = False
    digits: bool = False
    symbols: bool = False

    def __post_init__(self):
        if not (self.lower or self.upper or self.digits or self.symbols):
            raise GenerationError("at least one character class must be selected")


def parse_classes(spec: str) -> CharClassSelection:
    """Parse a comma-separated class spec such as "a,A,0,@"."""
    flags = dict.fromkeys(CLASS_CODES.values(), False)
    for code in spec.split(","):
        code = code.strip()
        if code not in CLASS_CODES:
            raise GenerationError(f"unknown character class {code!r} (expected a, A, 0 or @)")
        flags[CLASS_CODES[code]] = True
    return CharClassSelection(**flags)


def build_charset(sel: CharClassSelection) -> str:
    """Concatenate the selected classes in fixed order: lower, upper, digits, symbols."""
    return "".join(chars for name, chars in _CLASSES if getattr(sel, name))


class _SplitMix64:
    """Deterministic 64-bit generator for seeded mode (test use only)."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        # Rejection sampling: discard draws above the largest multiple of n.
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            value = self.next64()
            if value < limit:
                return value % n


def generate(
    length: int,
    charset: str,
    seed: int | None = None,
    require_classes: tuple[str, ...] = (),
    max_length: int = MAX_LENGTH,
) -> str:
    """Draw `length` characters independently and uniformly from charset.

    require_classes is a tuple of character sets that must each appear at
    least once; the whole password is redrawn until they all do.
    """
    if not charset:
        raise GenerationError("character set must be non-empty")
    if not 1 <= length <= max_length:
        raise GenerationError(f"length must be within 1..{max_length}, got {length}")
    if len(require_classes) > length:
        raise GenerationError(
            f"cannot fit {len(require_classes)} required classes in {length} characters"
        )
    rng = _SplitMix64(seed) if seed is not None else None
    while True:
        if rng is not None:
            password = "".join(charset[rng.randbelow(len(charset))] for _ in range(length))
        else:
            password = "".join(secrets.choice(charset) for _ in range(length))
        if all(any(ch in cls for ch in password) for cls in require_classes):
            return password
