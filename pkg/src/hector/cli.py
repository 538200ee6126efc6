"""Command-line entry point.

Thin wiring over the library: every subcommand parses flags, calls one
or two library functions and prints the result.  Exit codes: 0 success,
1 usage error, 2 data/format error, 3 authentication/integrity error.
Secrets are prompted (no echo) or read from stdin; passing them as flags
works for scripting but earns a warning on stderr.
"""

from __future__ import annotations

import argparse
import getpass
import json
import os
import sys

from .catalog import CatalogError
from .config import resolve_settings
from .crypto.pipeline import (
    AuthenticationError,
    CipherRecord,
    IntegrityError,
    RecordFormatError,
    decrypt_password,
    encrypt_password,
)
from .mnemonic import (
    ROLES,
    DerivationError,
    Party,
    Selection,
    derive_passkey,
    encode_party,
    entropy,
)
from .randpass import GenerationError, build_charset, generate, parse_classes
from .vault import (
    DEFAULT_VAULT_PATH,
    VaultError,
    VaultFile,
    vault_add,
    vault_get,
    vault_list,
    vault_load,
    vault_remove,
    vault_save,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_AUTH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; usage errors must exit 1 here.
    def error(self, message):
        raise _UsageError(message)


def _warn_flag_secret(name: str) -> None:
    print(
        f"warning: --{name} passes a secret on the command line, visible to other processes",
        file=sys.stderr,
    )


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _read_stdin_line() -> str:
    line = sys.stdin.readline()
    if not line:
        raise _UsageError("expected input on stdin")
    return line.rstrip("\n")


def _get_pin(args, default_salt: str) -> str:
    if args.pin is not None:
        _warn_flag_secret("pin")
        return args.pin
    if args.stdin:
        return _read_stdin_line()
    if sys.stdin.isatty():
        entered = getpass.getpass("PIN (4 characters, empty for the default): ")
        return entered or default_salt
    return default_salt


def _get_phrase(args, confirm: bool = False) -> str:
    if args.phrase is not None:
        _warn_flag_secret("phrase")
        return args.phrase
    if args.stdin:
        return _read_stdin_line()
    phrase = getpass.getpass("Secret phrase: ")
    if confirm and getpass.getpass("Confirm phrase: ") != phrase:
        raise _UsageError("phrases do not match")
    return phrase


def _parse_member(text: str) -> tuple[str, Selection]:
    role, sep, rest = text.partition("=")
    role = role.strip()
    if not sep or role not in ROLES:
        raise _UsageError(f"--member must look like 'role=H,F,R,M,T,B' with role in {ROLES}")
    parts = [p.strip() for p in rest.split(",")]
    if len(parts) != 6 or not all(p.isdigit() for p in parts):
        raise _UsageError(f"--member {role}: expected six comma-separated indices")
    h, f, r, m, t, b = (int(p) for p in parts)
    return role, Selection(h, f, r, m, t, b)


def cmd_derive(args) -> int:
    members = [_parse_member(m) for m in args.member or []]
    flag_fields = (args.hotel, args.floor, args.room, args.meal, args.topping, args.beverage)
    if any(v is not None for v in flag_fields):
        if any(v is None for v in flag_fields):
            raise _UsageError("derive needs all six of --hotel/--floor/--room/--meal/--topping/--beverage")
        if any(role == "self" for role, _ in members):
            raise _UsageError("give the self selection either as flags or as --member self=..., not both")
        members.insert(0, ("self", Selection(*flag_fields)))
    if not members:
        raise _UsageError("no selections given (use the selection flags or --member)")

    params, default_salt = resolve_settings(
        config_path=args.config, m=args.m, k=args.k, dictionary=args.dictionary
    )
    pin = _get_pin(args, default_salt)

    seq = encode_party(Party(tuple(members)))
    passkey = derive_passkey(seq, pin, params)
    report = entropy(len(params.symbol_list), len(passkey))
    if args.json:
        _emit(json.dumps({
            "digit_sequence": seq,
            "passkey": passkey,
            "length": len(passkey),
            "entropy_bits": round(report.bits, 3),
        }))
    else:
        _emit(f"passkey: {passkey}")
        _emit(f"entropy: {report.bits:.3f} bits")
    return EXIT_OK


def cmd_generate(args) -> int:
    selection = parse_classes(args.classes)
    charset = build_charset(selection)
    required = _required_classes(selection) if args.require_all_classes else ()
    password = generate(args.length, charset, seed=args.seed, require_classes=required)
    if args.json:
        _emit(json.dumps({"password": password}))
    else:
        _emit(password)
    return EXIT_OK


def _required_classes(selection) -> tuple[str, ...]:
    from .alphabet import DIGITS, LOWER, SYMBOLS, UPPER

    pairs = (("lower", LOWER), ("upper", UPPER), ("digits", DIGITS), ("symbols", SYMBOLS))
    return tuple(chars for name, chars in pairs if getattr(selection, name))


def cmd_encrypt(args) -> int:
    if args.password is not None:
        _warn_flag_secret("password")
        plaintext = args.password
    elif args.stdin:
        plaintext = _read_stdin_line()
    else:
        plaintext = getpass.getpass("Password to encrypt: ")
    phrase = _get_phrase(args, confirm=not args.stdin and args.phrase is None)
    record = encrypt_password(plaintext, phrase, args.mode)
    _emit(record.to_json())
    return EXIT_OK


def _read_record(args) -> CipherRecord:
    if args.record_file:
        with open(args.record_file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return CipherRecord.from_json(text)


def cmd_decrypt(args) -> int:
    record = _read_record(args)
    if args.phrase is not None:
        _warn_flag_secret("phrase")
        phrase = args.phrase
    else:
        phrase = getpass.getpass("Secret phrase: ")
    plaintext = decrypt_password(record, phrase)
    if args.json:
        _emit(json.dumps({"plaintext": plaintext}))
    else:
        _emit(plaintext)
    return EXIT_OK


def _vault_path(args) -> str:
    return args.vault or os.environ.get("HECTOR_VAULT") or DEFAULT_VAULT_PATH


def _load_vault_or_empty(path: str) -> VaultFile:
    if os.path.exists(path):
        return vault_load(path)
    return VaultFile()


def cmd_vault_add(args) -> int:
    record = _read_record(args)
    path = _vault_path(args)
    vault = _load_vault_or_empty(path)
    vault = vault_add(vault, args.label, record, force=args.force)
    vault_save(vault, path)
    if args.json:
        _emit(json.dumps({"ok": True, "label": args.label}))
    else:
        _emit(f"stored {args.label!r} in {path}")
    return EXIT_OK


def cmd_vault_get(args) -> int:
    record = vault_get(vault_load(_vault_path(args)), args.label)
    _emit(record.to_json())
    return EXIT_OK


def cmd_vault_list(args) -> int:
    path = _vault_path(args)
    rows = vault_list(_load_vault_or_empty(path))
    if args.json:
        _emit(json.dumps([{"label": label, "created_at": ts} for label, ts in rows]))
    else:
        for label, ts in rows:
            _emit(f"{label}\t{ts}")
    return EXIT_OK


def cmd_vault_rm(args) -> int:
    path = _vault_path(args)
    vault = vault_remove(vault_load(path), args.label)
    vault_save(vault, path)
    if args.json:
        _emit(json.dumps({"ok": True, "label": args.label}))
    else:
        _emit(f"removed {args.label!r}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service.app import serve

    serve(
        bind=args.bind,
        port=args.port,
        data_dir=args.data_dir or os.environ.get("HECTOR_DATA_DIR") or "./data",
        vault_path=_vault_path(args),
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hector", description="Mnemonic passkeys and encrypted password storage.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="derive a passkey from hotel selections and a PIN")
    p.add_argument("--hotel", type=int)
    p.add_argument("--floor", type=int)
    p.add_argument("--room", type=int)
    p.add_argument("--meal", type=int)
    p.add_argument("--topping", type=int)
    p.add_argument("--beverage", type=int)
    p.add_argument("--member", action="append", metavar="ROLE=H,F,R,M,T,B",
                   help="additional party member, repeatable")
    p.add_argument("--pin", help="4-character salt (prompted if omitted)")
    p.add_argument("--stdin", action="store_true", help="read the PIN from stdin")
    p.add_argument("--config", help="derivation config file (or HECTOR_CONFIG)")
    p.add_argument("--m", type=int, dest="m")
    p.add_argument("--k", type=int, dest="k")
    p.add_argument("--dictionary")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("generate", help="generate a random password")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--classes", default="a,A,0,@", help="subset of a,A,0,@ (default all)")
    p.add_argument("--seed", type=int, help="deterministic test mode; never for real passwords")
    p.add_argument("--require-all-classes", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("encrypt", help="encrypt a password under a secret phrase")
    p.add_argument("--mode", choices=("authenticated", "paper-compatible"), default="authenticated")
    p.add_argument("--stdin", action="store_true", help="read the password from stdin")
    p.add_argument("--password", help="password to encrypt (prefer prompt or --stdin)")
    p.add_argument("--phrase", help="secret phrase (prefer prompt)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_encrypt)

    p = sub.add_parser("decrypt", help="decrypt a cipher record")
    p.add_argument("--record-file", help="record JSON file (default: stdin)")
    p.add_argument("--phrase", help="secret phrase (prefer prompt)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decrypt)

    vault = sub.add_parser("vault", help="manage the vault file")
    vsub = vault.add_subparsers(dest="vault_command", required=True)
    for name, func, needs_label in (
        ("add", cmd_vault_add, True),
        ("get", cmd_vault_get, True),
        ("list", cmd_vault_list, False),
        ("rm", cmd_vault_rm, True),
    ):
        vp = vsub.add_parser(name)
        if needs_label:
            vp.add_argument("--label", required=True)
        if name == "add":
            vp.add_argument("--force", action="store_true", help="overwrite an existing label")
            vp.add_argument("--record-file", help="record JSON file (default: stdin)")
        vp.add_argument("--vault", help="vault path (or HECTOR_VAULT)")
        vp.add_argument("--json", action="store_true")
        vp.set_defaults(func=func)

    p = sub.add_parser("serve", help="run the loopback HTTP service")
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--data-dir", help="catalog data directory (or HECTOR_DATA_DIR)")
    p.add_argument("--vault", help="vault path (or HECTOR_VAULT)")
    p.set_defaults(func=cmd_serve)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DerivationError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, VaultError, RecordFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (AuthenticationError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AUTH


def main() -> None:
    sys.exit(run())
