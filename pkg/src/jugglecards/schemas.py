"""Request/response models for the HTTP service.

Counts and series coefficients travel as decimal strings: the exact values
outgrow 2^53 quickly and must survive any JSON consumer unharmed.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Method = Literal["brute", "transfer", "thm3", "prop1", "thm-l1", "cor-l1", "infinite"]
Formula = Literal["thm-l1", "cor-l1", "infinite"]
Suite = Literal["identities", "cross", "bijections", "oeis", "all"]

DEFAULT_BUDGET = 1_000_000


class CountRequest(BaseModel):
    balls: int = Field(ge=0)
    capacity: int | None = Field(default=None, ge=1)
    length: int = Field(default=1, ge=1)
    method: Method
    periodic: bool = False
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class CountResponse(BaseModel):
    b: int
    k: int | None
    l: int
    method: str
    periodic: bool
    count: str


class SeriesRequest(BaseModel):
    capacity: int | None = Field(default=None, ge=1)
    length: int = Field(default=1, ge=1)
    order: int = Field(default=20, ge=0)
    method: Method
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class SeriesResponse(BaseModel):
    k: int | None
    l: int
    order: int
    method: str
    coefficients: list[str]


class GenfunRequest(BaseModel):
    formula: Formula
    capacity: int | None = Field(default=None, ge=1)


class GenfunResponse(BaseModel):
    formula: str
    capacity: int | None
    numerator: list[str]
    denominator: list[str]


class VerifyRequest(BaseModel):
    suite: Suite
    max_balls: int = Field(default=5, ge=0)
    max_capacity: int = Field(default=2, ge=1)
    max_length: int = Field(default=3, ge=1)


class CheckReport(BaseModel):
    id: str
    ok: bool
    detail: str


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckReport]


class DrawRequest(BaseModel):
    card: str


class DrawResponse(BaseModel):
    card: str
    diagram: str


class FitRequest(BaseModel):
    sequence: list[str] = Field(min_length=1)
    max_order: int = Field(default=16, ge=1)


class FitResponse(BaseModel):
    found: bool
    order: int | None = None
    coeffs: list[str] | None = None
    valid_from: int | None = None
    char_poly: list[str] | None = None


class MatrixRequest(BaseModel):
    balls: int = Field(ge=0)
    capacity: int = Field(ge=1)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)


class MatrixResponse(BaseModel):
    b: int
    k: int
    states: list[list[int]]
    counts: list[list[int]]
