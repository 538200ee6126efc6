"""Loopback HTTP facade over the library.

Every endpoint is a direct call into the core package; responses carry
the library results bit-for-bit.  Errors map onto a small code set:
bad_request 400, not_found 404, auth_failed 403, conflict 409,
internal 500.  Request bodies and secrets are never logged.
"""

from __future__ import annotations

import os
import threading

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..catalog import KINDS, CatalogError, load_all, search_prefix
from ..config import resolve_settings
from ..crypto.pipeline import (
    AuthenticationError,
    CipherRecord,
    IntegrityError,
    RecordFormatError,
    decrypt_password,
    encrypt_password,
)
from ..mnemonic import DerivationError, Party, Selection, derive_passkey, encode_party, entropy
from ..randpass import CharClassSelection, GenerationError, build_charset, generate
from ..vault import (
    DuplicateLabelError,
    UnknownLabelError,
    VaultError,
    VaultFile,
    vault_add,
    vault_get,
    vault_list,
    vault_load,
    vault_remove,
    vault_save,
)
from . import schemas

DEFAULT_PORT = 8787

_STATUS = {
    "bad_request": 400,
    "not_found": 404,
    "auth_failed": 403,
    "conflict": 409,
    "internal": 500,
}


class ApiError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _error_response(code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_STATUS[code],
        content={"error": {"code": code, "message": message}},
    )


def create_app(
    data_dir: str = "./data",
    vault_path: str = "./hector-vault.json",
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="hector", docs_url="/api/docs", openapi_url="/api/openapi.json")

    catalogs = load_all(data_dir)
    vault_write_lock = threading.Lock()

    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return _error_response(exc.code, exc.message)

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return _error_response("bad_request", str(exc.errors()[:1]))

    @app.exception_handler(Exception)
    async def _unhandled(request: Request, exc: Exception):
        # Never echo request contents back; they may hold secrets.
        return _error_response("internal", exc.__class__.__name__)

    @app.get("/api/catalog/{kind}", response_model=list[schemas.CatalogEntryOut])
    def catalog_search(kind: str, q: str = "", limit: int = Query(default=20, ge=1, le=200)):
        if kind not in KINDS:
            raise ApiError("not_found", f"unknown catalog kind {kind!r}")
        hits = search_prefix(catalogs[kind], q, limit)
        return [schemas.CatalogEntryOut(index=e.index, name=e.name) for e in hits]

    @app.post("/api/passkey", response_model=schemas.PasskeyResponse)
    def passkey(req: schemas.PasskeyRequest):
        try:
            members = tuple(
                (m.role, Selection(m.hotel, m.floor, m.room, m.meal, m.topping, m.beverage))
                for m in req.members
            )
            params, _ = resolve_settings(m=req.m, k=req.k, dictionary=req.dictionary)
            seq = encode_party(Party(members))
            key = derive_passkey(seq, req.pin, params)
            report = entropy(len(params.symbol_list), len(key))
        except DerivationError as exc:
            raise ApiError("bad_request", str(exc)) from exc
        return schemas.PasskeyResponse(
            digit_sequence=seq,
            passkey=key,
            length=len(key),
            entropy_bits=round(report.bits, 3),
        )

    @app.post("/api/password", response_model=schemas.PasswordResponse)
    def password(req: schemas.PasswordRequest):
        try:
            selection = CharClassSelection(req.lower, req.upper, req.digits, req.symbols)
            charset = build_charset(selection)
            required = ()
            if req.require_all_classes:
                required = tuple(
                    chars
                    for flag, chars in (
                        (req.lower, build_charset(CharClassSelection(lower=True))),
                        (req.upper, build_charset(CharClassSelection(upper=True))),
                        (req.digits, build_charset(CharClassSelection(digits=True))),
                        (req.symbols, build_charset(CharClassSelection(symbols=True))),
                    )
                    if flag
                )
            result = generate(req.length, charset, seed=req.seed, require_classes=required)
            report = entropy(len(charset), len(result))
        except (GenerationError, DerivationError) as exc:
            raise ApiError("bad_request", str(exc)) from exc
        return schemas.PasswordResponse(
            password=result, length=len(result), entropy_bits=round(report.bits, 3)
        )

    @app.post("/api/encrypt", response_model=schemas.RecordWire)
    def encrypt(req: schemas.EncryptRequest):
        try:
            record = encrypt_password(req.plaintext, req.phrase, req.mode)
        except ValueError as exc:
            raise ApiError("bad_request", str(exc)) from exc
        return schemas.RecordWire(**record.to_wire())

    @app.post("/api/decrypt", response_model=schemas.DecryptResponse)
    def decrypt(req: schemas.DecryptRequest):
        try:
            record = CipherRecord.from_wire(req.record.to_wire_dict())
            plaintext = decrypt_password(record, req.phrase)
        except RecordFormatError as exc:
            raise ApiError("bad_request", str(exc)) from exc
        except (AuthenticationError, IntegrityError) as exc:
            raise ApiError("auth_failed", str(exc)) from exc
        return schemas.DecryptResponse(plaintext=plaintext)

    def _load_vault() -> VaultFile:
        if os.path.exists(vault_path):
            try:
                return vault_load(vault_path)
            except VaultError as exc:
                raise ApiError("internal", str(exc)) from exc
        return VaultFile()

    @app.get("/api/vault/entries", response_model=list[schemas.VaultEntryOut])
    def vault_entries():
        return [
            schemas.VaultEntryOut(label=label, created_at=ts)
            for label, ts in vault_list(_load_vault())
        ]

    @app.post("/api/vault/entries", response_model=schemas.OkResponse)
    def vault_store(req: schemas.VaultAddRequest):
        try:
            record = CipherRecord.from_wire(req.record.to_wire_dict())
        except RecordFormatError as exc:
            raise ApiError("bad_request", str(exc)) from exc
        with vault_write_lock:
            try:
                vault = vault_add(_load_vault(), req.label, record, force=req.force)
            except DuplicateLabelError as exc:
                raise ApiError("conflict", str(exc)) from exc
            except VaultError as exc:
                raise ApiError("bad_request", str(exc)) from exc
            vault_save(vault, vault_path)
        return schemas.OkResponse(label=req.label)

    @app.get("/api/vault/entries/{label}", response_model=schemas.RecordWire)
    def vault_fetch(label: str):
        try:
            record = vault_get(_load_vault(), label)
        except UnknownLabelError as exc:
            raise ApiError("not_found", str(exc)) from exc
        return schemas.RecordWire(**record.to_wire())

    @app.delete("/api/vault/entries/{label}", response_model=schemas.OkResponse)
    def vault_delete(label: str):
        with vault_write_lock:
            try:
                vault = vault_remove(_load_vault(), label)
            except UnknownLabelError as exc:
                raise ApiError("not_found", str(exc)) from exc
            vault_save(vault, vault_path)
        return schemas.OkResponse(label=label)

    if static_dir is None:
        candidate = os.path.join(os.path.dirname(data_dir) or ".", "frontend", "dist")
        static_dir = candidate if os.path.isdir(candidate) else None
    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def serve(bind: str = "127.0.0.1", port: int = DEFAULT_PORT,
          data_dir: str = "./data", vault_path: str = "./hector-vault.json") -> None:
    import uvicorn

    if bind not in ("127.0.0.1", "localhost", "::1"):
        print(f"WARNING: binding to {bind} exposes the API beyond this machine; "
              "it has no authentication", flush=True)
    app = create_app(data_dir=data_dir, vault_path=vault_path)
    uvicorn.run(app, host=bind, port=port, log_level="warning")
