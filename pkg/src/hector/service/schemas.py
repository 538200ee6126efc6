"""Pydantic request/response models for the loopback API.

Bodies mirror the library's domain types; the service layer adds no
transformation of its own.
"""

from __future__ import annotations

from pydantic import BaseModel, Field

from ..mnemonic import ROLES


class CatalogEntryOut(BaseModel):
    index: int
    name: str


class MemberIn(BaseModel):
    role: str = Field(pattern="^(" + "|".join(ROLES) + ")$")
    hotel: int
    floor: int
    room: int
    meal: int
    topping: int
    beverage: int


class PasskeyRequest(BaseModel):
    members: list[MemberIn] = Field(min_length=1, max_length=len(ROLES))
    pin: str
    m: int | None = None
    k: int | None = None
    dictionary: str | None = None


class PasskeyResponse(BaseModel):
    digit_sequence: str
    passkey: str
    length: int
    entropy_bits: float


class PasswordRequest(BaseModel):
    length: int
    lower: bool = False
    upper: bool = False
    digits: bool = False
    symbols: bool = False
    seed: int | None = None
    require_all_classes: bool = False


class PasswordResponse(BaseModel):
    password: str
    length: int
    entropy_bits: float


class RecordWire(BaseModel):
    v: int
    cipher: str
    kdf: str
    mac: str
    iv: str
    ct: str
    tag: str | None = None

    def to_wire_dict(self) -> dict:
        wire = self.model_dump()
        if wire.get("tag") is None:
            wire.pop("tag", None)
        return wire


class EncryptRequest(BaseModel):
    plaintext: str
    phrase: str
    mode: str = "authenticated"


class DecryptRequest(BaseModel):
    record: RecordWire
    phrase: str


class DecryptResponse(BaseModel):
    plaintext: str


class VaultEntryOut(BaseModel):
    label: str
    created_at: str


class VaultAddRequest(BaseModel):
    label: str
    record: RecordWire
    force: bool = False


class OkResponse(BaseModel):
    ok: bool = True
    label: str | None = None


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
