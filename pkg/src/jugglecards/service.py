"""FastAPI service exposing the library: counting, series, closed forms,
verification suites, card drawing, recurrence fitting and matrix export.

All computation is stateless and exact; errors surface as HTTP 400 with a
`code` of either `usage_error` or `budget_exceeded`.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import genfun
from .cards import format_card, parse_card, render_card, validate_card
from .compositions import count_compositions_bounded
from .errors import BudgetExceededError, InvalidCardError
from .rational import expand, fit_recurrence
from .schemas import (
    CheckReport,
    CountRequest,
    CountResponse,
    DrawRequest,
    DrawResponse,
    FitRequest,
    FitResponse,
    GenfunRequest,
    GenfunResponse,
    MatrixRequest,
    MatrixResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyRequest,
    VerifyResponse,
)
from .sequences import (
    build_transfer_matrix,
    count_periodic,
    count_sequences,
    count_sequences_brute,
)
from .verify import run_suite

app = FastAPI(
    title="jugglecards",
    description="Exact enumeration of multiplex juggling cards and card sequences",
    version="0.1.0",
)

_SINGLE_CARD_METHODS = {"prop1", "thm-l1", "cor-l1", "infinite"}


class _UsageError(ValueError):
    pass


def _usage(detail: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": "usage_error", "message": detail})


def _budget(detail: str) -> HTTPException:
    return HTTPException(
        status_code=400, detail={"code": "budget_exceeded", "message": detail}
    )


def _check_method_args(method: str, capacity: int | None, length: int, periodic: bool):
    if method in _SINGLE_CARD_METHODS and length != 1:
        raise _UsageError(f"method {method} requires length 1")
    if periodic and method not in ("brute", "transfer"):
        raise _UsageError("--periodic requires the brute or transfer method")
    if method != "infinite" and capacity is None:
        raise _UsageError(f"method {method} requires a capacity")


def _guard_terms(order: int, budget: int):
    if order + 1 > budget:
        raise BudgetExceededError(
            f"{order + 1} series terms exceed budget {budget}"
        )


def _guard_transfer(b: int, k: int, budget: int):
    states = count_compositions_bounded(b, k)
    if states * states > budget:
        raise BudgetExceededError(
            f"transfer matrix needs {states}x{states} entries, budget {budget}"
        )
    if (b + 1) * (k + 1) > budget:
        raise BudgetExceededError("card count estimate would exceed the budget")
    cards = genfun.card_series(k, b)[b] if b else 1
    if cards > budget:
        raise BudgetExceededError(f"{cards} cards exceed budget {budget}")


def _series_by_method(method: str, capacity: int | None, length: int, order: int, budget: int) -> list[int]:
    if method == "infinite":
        _guard_terms(order, budget)
        return genfun.infinite_capacity_series(order)
    assert capacity is not None
    if method == "prop1":
        _guard_terms((order + 1) * (capacity + 1) - 1, budget)
        return genfun.card_series(capacity, order)
    if method == "thm-l1":
        _guard_terms(order, budget)
        _guard_terms(2 ** (capacity - 1), budget)  # composition sum size
        return expand(genfun.rational_by_compositions(capacity), order)
    if method == "cor-l1":
        _guard_terms(order, budget)
        _guard_terms(capacity * capacity, budget)
        return expand(genfun.rational_by_binomials(capacity), order)
    if method == "thm3":
        return genfun.sequence_series(capacity, length, order, max_box=budget)
    if method == "transfer":
        _guard_transfer(order, capacity, budget)
        return [count_sequences(b, capacity, length) for b in range(order + 1)]
    if method == "brute":
        _guard_transfer(order, capacity, budget)
        return [
            count_sequences_brute(b, capacity, length, limit=budget)
            for b in range(order + 1)
        ]
    raise _UsageError(f"unknown method {method}")


def _count_by_method(req: CountRequest) -> int:
    b, k, l = req.balls, req.capacity, req.length
    if req.method == "infinite":
        _guard_terms(b, req.budget)
        return genfun.infinite_capacity_series(b)[b]
    assert k is not None
    if req.method == "prop1":
        _guard_terms((b + 1) * (k + 1) - 1, req.budget)
        return genfun.card_series(k, b)[b]
    if req.method == "thm-l1":
        _guard_terms(b, req.budget)
        _guard_terms(2 ** (k - 1), req.budget)
        return expand(genfun.rational_by_compositions(k), b)[b]
    if req.method == "cor-l1":
        _guard_terms(b, req.budget)
        _guard_terms(k * k, req.budget)
        return expand(genfun.rational_by_binomials(k), b)[b]
    if req.method == "thm3":
        return genfun.sequence_series(k, l, b, max_box=req.budget)[b]
    if req.method == "transfer":
        _guard_transfer(b, k, req.budget)
        if req.periodic:
            return count_periodic(b, k, l)
        return count_sequences(b, k, l)
    if req.method == "brute":
        _guard_transfer(b, k, req.budget)
        if req.periodic:
            est = count_sequences(b, k, l)
            if est > req.budget:
                raise BudgetExceededError(
                    f"{est} sequences to walk exceed budget {req.budget}"
                )
        return count_sequences_brute(
            b, k, l, periodic=req.periodic, limit=req.budget
        )
    raise _UsageError(f"unknown method {req.method}")


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest) -> CountResponse:
    try:
        _check_method_args(req.method, req.capacity, req.length, req.periodic)
        value = _count_by_method(req)
    except _UsageError as exc:
        raise _usage(str(exc))
    except BudgetExceededError as exc:
        raise _budget(str(exc))
    return CountResponse(
        b=req.balls,
        k=req.capacity,
        l=req.length,
        method=req.method,
        periodic=req.periodic,
        count=str(value),
    )


@app.post("/series", response_model=SeriesResponse)
def series(req: SeriesRequest) -> SeriesResponse:
    try:
        _check_method_args(req.method, req.capacity, req.length, periodic=False)
        values = _series_by_method(
            req.method, req.capacity, req.length, req.order, req.budget
        )
    except _UsageError as exc:
        raise _usage(str(exc))
    except BudgetExceededError as exc:
        raise _budget(str(exc))
    return SeriesResponse(
        k=req.capacity,
        l=req.length,
        order=req.order,
        method=req.method,
        coefficients=[str(v) for v in values],
    )


@app.post("/genfun", response_model=GenfunResponse)
def genfun_endpoint(req: GenfunRequest) -> GenfunResponse:
    try:
        if req.formula == "infinite":
            rf = genfun.infinite_capacity_rational()
        else:
            if req.capacity is None:
                raise _UsageError(f"formula {req.formula} requires a capacity")
            if req.formula == "thm-l1":
                rf = genfun.rational_by_compositions(req.capacity)
            else:
                rf = genfun.rational_by_binomials(req.capacity)
    except _UsageError as exc:
        raise _usage(str(exc))
    return GenfunResponse(
        formula=req.formula,
        capacity=req.capacity,
        numerator=[str(c) for c in rf.numerator.coeffs],
        denominator=[str(c) for c in rf.denominator.coeffs],
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    results = run_suite(
        req.suite,
        max_balls=req.max_balls,
        max_capacity=req.max_capacity,
        max_length=req.max_length,
    )
    checks = [CheckReport(id=r.check_id, ok=r.ok, detail=r.detail) for r in results]
    return VerifyResponse(
        suite=req.suite, passed=all(r.ok for r in results), checks=checks
    )


@app.post("/draw", response_model=DrawResponse)
def draw(req: DrawRequest) -> DrawResponse:
    try:
        card = parse_card(req.card)
    except ValueError as exc:
        raise _usage(f"bad card text: {exc}")
    verdict = validate_card(card)
    if not verdict:
        raise _usage(f"invalid card: {verdict.reason}")
    try:
        diagram = render_card(card)
    except InvalidCardError as exc:
        raise _usage(f"invalid card: {exc}")
    return DrawResponse(card=format_card(card), diagram=diagram)


@app.post("/fit", response_model=FitResponse)
def fit(req: FitRequest) -> FitResponse:
    try:
        terms = [int(tok) for tok in req.sequence]
    except ValueError:
        raise _usage("sequence entries must be decimal integers")
    rec = fit_recurrence(terms, max_order=req.max_order)
    if rec is None:
        return FitResponse(found=False)
    report = rec.to_json_dict()
    return FitResponse(
        found=True,
        order=report["order"],
        coeffs=report["coeffs"],
        valid_from=report["valid_from"],
        char_poly=report["char_poly"],
    )


@app.post("/matrix", response_model=MatrixResponse)
def matrix(req: MatrixRequest) -> MatrixResponse:
    try:
        _guard_transfer(req.balls, req.capacity, req.budget)
    except BudgetExceededError as exc:
        raise _budget(str(exc))
    tm = build_transfer_matrix(req.balls, req.capacity)
    data = tm.to_json_dict()
    return MatrixResponse(
        b=data["b"], k=data["k"], states=data["states"], counts=data["counts"]
    )
