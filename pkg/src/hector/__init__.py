"""Hector: mnemonic passkeys, random passwords, and encrypted password storage."""

from .catalog import (
    Catalog,
    CatalogEntry,
    CatalogError,
    CatalogKind,
    KINDS,
    load_all,
    load_catalog,
    lookup_name,
    save_catalog,
    search_prefix,
)
from .crypto import (
    AuthenticationError,
    CipherRecord,
    IntegrityError,
    RecordFormatError,
    decrypt_password,
    derive_keys,
    encrypt_password,
    sha256,
)
from .mnemonic import (
    DerivationError,
    DerivationParams,
    EntropyReport,
    Party,
    Selection,
    derive_passkey,
    encode_party,
    encode_selection,
    entropy,
    lcg_mix,
    salt_to_x0,
)
from .randpass import CharClassSelection, GenerationError, build_charset, generate
from .vault import (
    DuplicateLabelError,
    UnknownLabelError,
    VaultEntry,
    VaultError,
    VaultFile,
    vault_add,
    vault_get,
    vault_list,
    vault_load,
    vault_remove,
    vault_save,
)

__version__ = "0.1.0"
