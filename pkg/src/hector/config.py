"""Derivation settings from a key = value config file.

Recognized keys: m, k, dictionary, default_salt.  Lines that are blank
or start with # are skipped.  CLI flags override file values, which
override the built-in published defaults.
"""

from __future__ import annotations

import os

from .mnemonic import DEFAULT_SALT, DerivationError, DerivationParams

CONFIG_ENV = "HECTOR_CONFIG"

_KEYS = ("m", "k", "dictionary", "default_salt")


def load_config(path: str | os.PathLike) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in _KEYS:
                raise DerivationError(f"{path}:{lineno}: expected '<key> = <value>' with key in {_KEYS}")
            values[key] = value.strip()
    return values


def resolve_settings(
    config_path: str | os.PathLike | None = None,
    m: int | None = None,
    k: int | None = None,
    dictionary: str | None = None,
    salt: str | None = None,
) -> tuple[DerivationParams, str]:
    """Merge defaults, config file and explicit overrides into
    (DerivationParams, default salt)."""
    file_values: dict[str, str] = {}
    if config_path is None:
        config_path = os.environ.get(CONFIG_ENV)
    if config_path:
        file_values = load_config(config_path)

    def _int_of(key: str) -> int | None:
        raw = file_values.get(key)
        if raw is None:
            return None
        try:
            return int(raw)
        except ValueError:
            raise DerivationError(f"config key {key} must be an integer, got {raw!r}") from None

    defaults = DerivationParams()
    if m is None:
        m = _int_of("m")
    if k is None:
        k = _int_of("k")
    params = DerivationParams(
        m=m if m is not None else defaults.m,
        k=k if k is not None else defaults.k,
        dictionary=dictionary or file_values.get("dictionary") or defaults.dictionary,
    )
    default_salt = salt or file_values.get("default_salt") or DEFAULT_SALT
    return params, default_salt
