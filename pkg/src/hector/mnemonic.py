"""Mnemonic passkey derivation.

A person's six catalog picks become a zero-padded 17-digit sequence; a
4-character salt (PIN) is integerized and run through one linear
congruential step; each digit is then shifted by the mixed state and a
per-position dictionary code and mapped into the 93-symbol alphabet.

Math conventions, frozen:
  - position indices are 1-based: X0 weights are 10^1..10^4, the
    dictionary position for output position i is 1 + ((i-1) mod L2)
  - UP[i] is the numeric value 0-9 of the i-th digit, not its ASCII code
  - the dictionary wraps modulo its length, so sequences longer than the
    dictionary (multi-person parties) stay well-defined

All arithmetic is exact Python integers, so configurable multipliers and
increments can never wrap around silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .alphabet import SYMBOL_LIST
from .catalog import KINDS


class DerivationError(ValueError):
    """Raised for inputs that violate the derivation's domain."""


# Canonical member order; parties always serialize in this order no
# matter how their members were supplied.
ROLES = ("self", "spouse", "dad", "mom", "daughter", "son")

# Published defaults.  Deployments are expected to override these via the
# config file; they are pinned so that tests and docs are reproducible.
DEFAULT_M = 45
DEFAULT_K = 241
DEFAULT_SALT = "7391"
DEFAULT_DICTIONARY = SYMBOL_LIST[::-1]

_FIELD_RANGES = {
    "hotel": KINDS["hotel"].expected_cardinality,
    "floor": KINDS["floor"].expected_cardinality,
    "room": KINDS["room"].expected_cardinality,
    "meal": KINDS["meal"].expected_cardinality,
    "topping": KINDS["topping"].expected_cardinality,
    "beverage": KINDS["beverage"].expected_cardinality,
}

_FIELD_WIDTHS = {
    "hotel": KINDS["hotel"].digit_width,
    "floor": KINDS["floor"].digit_width,
    "room": KINDS["room"].digit_width,
    "meal": KINDS["meal"].digit_width,
    "topping": KINDS["topping"].digit_width,
    "beverage": KINDS["beverage"].digit_width,
}

# Digits contributed by one person: 4+4+3+2+2+2.
PERSON_DIGITS = sum(_FIELD_WIDTHS.values())


@dataclass(frozen=True)
class Selection:
    """One person's six catalog indices."""

    hotel: int
    floor: int
    room: int
    meal: int
    topping: int
    beverage: int

    def __post_init__(self):
        for name, limit in _FIELD_RANGES.items():
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DerivationError(f"{name} index must be an integer, got {value!r}")
            if not 1 <= value <= limit:
                raise DerivationError(f"{name} index {value} outside 1..{limit}")


@dataclass(frozen=True)
class Party:
    """An ordered group of up to six people checking in together.

    Members are normalized to canonical role order at construction.
    """

    members: tuple[tuple[str, Selection], ...]

    def __post_init__(self):
        if not 1 <= len(self.members) <= len(ROLES):
            raise DerivationError(f"party must have 1..{len(ROLES)} members")
        roles = [role for role, _ in self.members]
        for role in roles:
            if role not in ROLES:
                raise DerivationError(f"unknown role {role!r}")
        if len(set(roles)) != len(roles):
            raise DerivationError("party roles must be unique")
        ordered = tuple(sorted(self.members, key=lambda m: ROLES.index(m[0])))
        object.__setattr__(self, "members", ordered)


@dataclass(frozen=True)
class DerivationParams:
    """Secret derivation parameters: LCG multiplier/increment, dictionary,
    and the output alphabet."""

    m: int = DEFAULT_M
    k: int = DEFAULT_K
    dictionary: str = DEFAULT_DICTIONARY
    symbol_list: str = SYMBOL_LIST

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise DerivationError("m and k must be non-negative")
        if not self.dictionary:
            raise DerivationError("dictionary must be non-empty")
        if len(self.symbol_list) != 93 or len(set(self.symbol_list)) != 93:
            raise DerivationError("symbol list must contain exactly 93 distinct characters")


@dataclass(frozen=True)
class MixState:
    x0: int
    x1: int


@dataclass(frozen=True)
class EntropyReport:
    alphabet_size: int
    length: int
    bits: float


def validate_salt(salt: str) -> str:
    if len(salt) != 4:
        raise DerivationError("salt/PIN must be exactly 4 characters")
    for ch in salt:
        if not 0x21 <= ord(ch) <= 0x7E:
            raise DerivationError(f"salt character {ch!r} is not printable ASCII")
    return salt


def encode_selection(sel: Selection) -> str:
    """Zero-padded concatenation of the six indices; always 17 digits."""
    return "".join(
        f"{getattr(sel, name):0{width}d}" for name, width in _FIELD_WIDTHS.items()
    )


def encode_party(party: Party) -> str:
    return "".join(encode_selection(sel) for _, sel in party.members)


def salt_to_x0(salt: str) -> int:
    """Integerize the salt: X0 = sum of ascii(salt[j]) * 10^j for j = 1..4."""
    validate_salt(salt)
    return sum(ord(ch) * 10 ** j for j, ch in enumerate(salt, start=1))


def lcg_mix(x0: int, params: DerivationParams) -> MixState:
    """One linear congruential step over the dictionary length."""
    return MixState(x0, (params.m * x0 + params.k) % len(params.dictionary))


def derive_passkey(seq: str, salt: str, params: DerivationParams) -> str:
    """Map a digit sequence to a passkey over the 93-symbol alphabet.

    Output position i (1-based) is symbol_list[(X1 + UP[i] + D[i]) mod 93]
    where UP[i] is the digit value and D[i] the ASCII code of the
    dictionary character at 1 + ((i-1) mod L2).
    """
    if not seq or not seq.isascii() or not seq.isdigit():
        raise DerivationError("digit sequence must be a non-empty string of ASCII digits")
    x1 = lcg_mix(salt_to_x0(salt), params).x1
    dictionary = params.dictionary
    symbols = params.symbol_list
    l2 = len(dictionary)
    l3 = len(symbols)
    return "".join(
        symbols[(x1 + int(digit) + ord(dictionary[pos % l2])) % l3]
        for pos, digit in enumerate(seq)
    )


def entropy(alphabet_size: int, length: int) -> EntropyReport:
    """Entropy in bits of a length-L string over an N-symbol alphabet."""
    if alphabet_size < 2:
        raise DerivationError(f"alphabet size must be >= 2, got {alphabet_size}")
    if length < 1:
        raise DerivationError(f"length must be >= 1, got {length}")
    return EntropyReport(alphabet_size, length, length * math.log2(alphabet_size))
