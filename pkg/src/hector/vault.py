"""Labeled storage of cipher records in a versioned JSON vault file.

Records are individually encrypted before they reach the vault, so the
file itself carries no extra protection layer.  Saves are atomic (write
a temporary sibling, fsync, rename) and mutations take an advisory file
lock so concurrent writers serialize; readers need no lock.
"""

from __future__ import annotations

import fcntl
import json
import os
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime, timezone

from .crypto.pipeline import CipherRecord, RecordFormatError

VAULT_VERSION = 1
DEFAULT_VAULT_PATH = "./hector-vault.json"
MAX_LABEL_LENGTH = 128


class VaultError(Exception):
    pass


class DuplicateLabelError(VaultError):
    pass


class UnknownLabelError(VaultError):
    pass


def _check_label(label: str) -> str:
    if not label or len(label) > MAX_LABEL_LENGTH:
        raise VaultError(f"label must be 1..{MAX_LABEL_LENGTH} characters")
    if any(ord(ch) < 0x20 or ord(ch) == 0x7F for ch in label):
        raise VaultError("label must not contain control characters")
    return label


@dataclass(frozen=True)
class VaultEntry:
    label: str
    created_at: str
    record: CipherRecord

    def __post_init__(self):
        _check_label(self.label)


@dataclass(frozen=True)
class VaultFile:
    version: int = VAULT_VERSION
    entries: tuple[VaultEntry, ...] = ()

    def __post_init__(self):
        if self.version != VAULT_VERSION:
            raise VaultError(f"unsupported vault version {self.version!r}")
        labels = [e.label for e in self.entries]
        if len(set(labels)) != len(labels):
            raise VaultError("vault labels must be pairwise distinct")


def _now_iso() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def vault_load(path: str | os.PathLike) -> VaultFile:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise VaultError(f"vault file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise VaultError(f"vault file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("entries"), list):
        raise VaultError("vault file must be an object with an entries list")
    try:
        entries = tuple(
            VaultEntry(
                label=item["label"],
                created_at=item["created_at"],
                record=CipherRecord.from_wire(item["record"]),
            )
            for item in doc["entries"]
        )
    except (KeyError, TypeError, RecordFormatError) as exc:
        raise VaultError(f"malformed vault entry: {exc}") from exc
    return VaultFile(version=doc.get("version"), entries=entries)


def _serialize(vault: VaultFile) -> str:
    doc = {
        "version": vault.version,
        "entries": [
            {"label": e.label, "created_at": e.created_at, "record": e.record.to_wire()}
            for e in vault.entries
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


@contextmanager
def _write_lock(path: str):
    lock_path = path + ".lock"
    fd = os.open(lock_path, os.O_CREAT | os.O_RDWR, 0o600)
    try:
        fcntl.flock(fd, fcntl.LOCK_EX)
        yield
    finally:
        fcntl.flock(fd, fcntl.LOCK_UN)
        os.close(fd)


def vault_save(vault: VaultFile, path: str | os.PathLike) -> None:
    """Atomically replace the vault file: temp sibling, fsync, rename."""
    path = os.fspath(path)
    data = _serialize(vault)
    with _write_lock(path):
        tmp_path = f"{path}.tmp.{os.getpid()}"
        try:
            with open(tmp_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(data)
                fh.flush()
                os.fsync(fh.fileno())
            os.replace(tmp_path, path)
        finally:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)


def vault_add(vault: VaultFile, label: str, record: CipherRecord, force: bool = False) -> VaultFile:
    _check_label(label)
    existing = tuple(e for e in vault.entries if e.label != label)
    if len(existing) != len(vault.entries) and not force:
        raise DuplicateLabelError(f"label {label!r} already exists (use force to overwrite)")
    entry = VaultEntry(label=label, created_at=_now_iso(), record=record)
    return VaultFile(version=vault.version, entries=existing + (entry,))


def vault_get(vault: VaultFile, label: str) -> CipherRecord:
    for entry in vault.entries:
        if entry.label == label:
            return entry.record
    raise UnknownLabelError(f"no entry labeled {label!r}")


def vault_list(vault: VaultFile) -> list[tuple[str, str]]:
    """Labels and creation times only; ciphertext bytes stay private."""
    return [(e.label, e.created_at) for e in vault.entries]


def vault_remove(vault: VaultFile, label: str) -> VaultFile:
    remaining = tuple(e for e in vault.entries if e.label != label)
    if len(remaining) == len(vault.entries):
        raise UnknownLabelError(f"no entry labeled {label!r}")
    return VaultFile(version=vault.version, entries=remaining)
