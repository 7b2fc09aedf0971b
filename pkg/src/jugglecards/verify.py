"""Cross-checking suites: every formula, bijection and identity in the
library checked against an independent route.

Checks are small pure functions returning a CheckResult; suites bundle them.
The reference sequences pinned here are the published OEIS prefixes for
single-card counts (A370304, A370306) and unbounded capacity (A003480).
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import genfun, qcalc
from .cards import Card, card_to_embedding, embedding_to_card, enumerate_embeddings
from .compositions import homogeneous
from .embeddings import (
    embedding_to_sequence,
    enumerate_sequence_embeddings,
    parse_sequence_embedding,
    sequence_to_embedding,
)
from .rational import expand
from .sequences import (
    CardSequence,
    count_sequences,
    count_sequences_brute,
    enumerate_sequences,
)
from .series import Profile, TruncatedSeries

SUITES = ("identities", "cross", "bijections", "oeis", "all")

A370304_PREFIX = [
    1, 2, 7, 17, 41, 91, 195, 403, 812, 1601, 3102, 5922, 11165, 20824, 38477,
]
A370306_PREFIX = [
    1, 2, 7, 24, 70, 198, 532, 1370, 3418, 8296, 19677, 45770, 104687, 235972,
]
A003480_PREFIX = [
    1, 2, 7, 24, 82, 280, 956, 3264, 11144, 38048, 129904, 443520, 1514272,
]

_SEED = 20240425

WORKED_EXAMPLE_CARDS = (
    Card((4, 2, 3), (4, 3, 2), (0, 1, 2)),
    Card((4, 3, 2), (2, 3, 3, 1), (0, 2, 3)),
    Card((2, 3, 3, 1), (2, 3, 3, 1), (1, 2, 3, 4)),
    Card((2, 3, 3, 1), (4, 3, 1, 1), (0, 1, 2, 3)),
)
WORKED_EXAMPLE_TEXT = "gamma=0004|112|2|4;delta=0000|0011|e|22"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    ok: bool
    detail: str


def _result(check_id: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(check_id, ok, detail)


# -- oeis suite ---------------------------------------------------------------


def check_oeis_capacity2() -> CheckResult:
    n = len(A370304_PREFIX) - 1
    by_extraction = genfun.card_series(2, n)
    by_rational = expand(genfun.rational_by_compositions(2), n)
    ok = by_extraction == A370304_PREFIX and by_rational == A370304_PREFIX
    return _result(
        "oeis.capacity2", ok, f"{n + 1} terms, extraction and closed form"
    )


def check_oeis_capacity3() -> CheckResult:
    n = len(A370306_PREFIX) - 1
    by_extraction = genfun.card_series(3, n)
    by_rational = expand(genfun.rational_by_compositions(3), n)
    ok = by_extraction == A370306_PREFIX and by_rational == A370306_PREFIX
    return _result(
        "oeis.capacity3", ok, f"{n + 1} terms, extraction and closed form"
    )


def check_oeis_unbounded() -> CheckResult:
    n = len(A003480_PREFIX) - 1
    ok = genfun.infinite_capacity_series(n) == A003480_PREFIX
    return _result("oeis.unbounded", ok, f"{n + 1} terms, both routes")


# -- identities suite ----------------------------------------------------------


def check_homogeneous_reduction() -> CheckResult:
    """(z_{m-1} - z_m) h_n(1, z1..zm) telescopes into the two shorter sums."""
    failures = 0
    for m in range(2, 6):
        profile = Profile(
            tuple(f"z{i}" for i in range(1, m + 1)), (9,) * m
        )
        zs = [TruncatedSeries.variable(profile, f"z{i}") for i in range(1, m + 1)]
        for n in range(0, 9):
            lhs = (zs[m - 2] - zs[m - 1]) * homogeneous(n, [1] + zs)
            rhs = zs[m - 2] * homogeneous(n, [1] + zs[: m - 1]) - zs[m - 1] * (
                homogeneous(n, [1] + zs[: m - 2] + [zs[m - 1]])
            )
            if lhs != rhs:
                failures += 1
    return _result(
        "identities.homogeneous_reduction",
        failures == 0,
        "n <= 8, m <= 5, exact polynomial identity",
    )


def _random_series(rng: random.Random, profile: Profile, terms: int) -> TruncatedSeries:
    data = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, o) for o in profile.orders)
        data[exps] = rng.randint(-9, 9)
    return TruncatedSeries(profile, data)


def check_operator_reduction(trials: int = 100) -> CheckResult:
    """The index-(m+1) raising operator written through the two reindexed
    index-m operators."""
    rng = random.Random(_SEED)
    profile = Profile(("z1", "z2", "z3", "z4", "z5"), (4,) * 5)
    zs = {i: TruncatedSeries.variable(profile, f"z{i}") for i in range(1, 6)}
    failures = 0
    for _ in range(trials):
        a = _random_series(rng, profile, 10)
        for m in range(2, 5):
            lhs = (zs[m - 1] - zs[m]) * qcalc.apply_homogeneous_operator(m + 1, a)
            names_a = [f"z{i}" for i in range(1, m)]
            names_b = [f"z{i}" for i in range(1, m - 1)] + [f"z{m}"]
            rhs = zs[m - 1] * qcalc.conjugated_homogeneous_operator(
                a, names_a, f"z{m + 1}"
            ) - zs[m] * qcalc.conjugated_homogeneous_operator(
                a, names_b, f"z{m + 1}"
            )
            if lhs != rhs:
                failures += 1
    return _result(
        "identities.operator_reduction",
        failures == 0,
        f"{trials} random series, m <= 4",
    )


def check_q_substitution(trials: int = 100) -> CheckResult:
    """Raising operator as (f(z2) - z1 f(z1 z2)) / (1 - z1)."""
    rng = random.Random(_SEED + 1)
    profile = Profile(("z1", "z2"), (10, 8))
    z1 = TruncatedSeries.variable(profile, "z1")
    geometric = (1 - z1).invert()
    failures = 0
    for _ in range(trials):
        f = TruncatedSeries(
            profile,
            {(0, n): rng.randint(-9, 9) for n in range(0, 9)},
        )
        lhs = qcalc.apply_homogeneous_operator(2, f)
        rhs = (f - z1 * f.substitute_scaled("z2", "z1")) * geometric
        if lhs != rhs:
            failures += 1
    return _result(
        "identities.q_substitution", failures == 0, f"{trials} random polynomials"
    )


def check_q_derivative_shift() -> CheckResult:
    """Index-2 raising operator == multiply by the variable, then take the
    q-derivative with q = z1."""
    profile = Profile(("z1", "z2"), (9, 9))
    z2 = TruncatedSeries.variable(profile, "z2")
    rng = random.Random(_SEED + 2)
    failures = 0
    for n in range(0, 9):
        monomial = z2**n
        lhs = qcalc.apply_homogeneous_operator(2, monomial)
        rhs = qcalc.q_derivative(monomial * z2, "z2", "z1")
        if lhs != rhs:
            failures += 1
    poly = TruncatedSeries(profile, {(0, n): rng.randint(-9, 9) for n in range(9)})
    if qcalc.apply_homogeneous_operator(2, poly) != qcalc.q_derivative(
        poly * TruncatedSeries.variable(profile, "z2"), "z2", "z1"
    ):
        failures += 1
    return _result(
        "identities.q_derivative_shift", failures == 0, "n <= 8 plus a random poly"
    )


def check_partial_sum() -> CheckResult:
    """Summing [z^s] for s = 0..k equals multiplying by 1/(1-z) and taking
    [z^k]."""
    failures = 0
    order = 12
    for k in range(1, 6):
        profile = Profile(("x", "z"), (order, k))
        inner = TruncatedSeries(
            profile, {(i, j): 1 for i in range(1, k + 1) for j in range(i + 1)}
        )
        core = (1 - inner).invert()
        z = TruncatedSeries.variable(profile, "z")
        summed = [0] * (order + 1)
        for s in range(k + 1):
            for b, c in enumerate(core.slice_at({"z": s}).univariate_coefficients()):
                summed[b] += c
        extracted = (
            ((1 - z).invert() * core).slice_at({"z": k}).univariate_coefficients()
        )
        if summed != extracted:
            failures += 1
    return _result("identities.partial_sum", failures == 0, "k <= 5, order 12")


# -- cross suite ----------------------------------------------------------------


def check_methods(max_balls: int, max_capacity: int, max_length: int) -> CheckResult:
    grids = 0
    failures = []
    for k in range(1, max_capacity + 1):
        for l in range(1, max_length + 1):
            by_operator = genfun.sequence_series(k, l, max_balls)
            for b in range(max_balls + 1):
                grids += 1
                transfer = count_sequences(b, k, l)
                brute = count_sequences_brute(b, k, l)
                if not (by_operator[b] == transfer == brute):
                    failures.append((b, k, l))
    return _result(
        "cross.methods",
        not failures,
        f"operator/transfer/brute agree on {grids} triples"
        + (f"; first failure {failures[0]}" if failures else ""),
    )


def check_single_card_formulas() -> CheckResult:
    ok = True
    for k in range(1, 6):
        a = genfun.card_series(k, 30)
        b = expand(genfun.rational_by_compositions(k), 30)
        c = expand(genfun.rational_by_binomials(k), 30)
        ok = ok and a == b == c
    for k in range(1, 7):
        ok = ok and genfun.rational_by_compositions(k) == genfun.rational_by_binomials(k)
    return _result(
        "cross.single_card_formulas", ok, "three routes, k <= 5 at 31 terms"
    )


def check_operator_vs_extraction() -> CheckResult:
    ok = all(
        genfun.sequence_series(k, 1, 15) == genfun.card_series(k, 15)
        for k in range(1, 4)
    )
    return _result(
        "cross.operator_vs_extraction", ok, "length-1 pipeline vs extraction, k <= 3"
    )


def check_stabilization(max_balls: int, max_length: int) -> CheckResult:
    ok = True
    for b in range(0, min(max_balls, 6) + 1):
        for l in range(1, max_length + 1):
            base = count_sequences(b, max(b, 1), l)
            for k in range(max(b, 1), max(b, 1) + 3):
                ok = ok and count_sequences(b, k, l) == base
    return _result(
        "cross.stabilization", ok, "counts constant for capacity >= balls"
    )


def check_monotonicity(max_balls: int, max_capacity: int, max_length: int) -> CheckResult:
    ok = True
    for b in range(0, min(max_balls, 6) + 1):
        for l in range(1, max_length + 1):
            prev = None
            for k in range(1, max_capacity + 2):
                cur = count_sequences(b, k, l)
                if prev is not None and cur < prev:
                    ok = False
                prev = cur
    return _result("cross.monotonicity", ok, "counts weakly increase with capacity")


# -- bijections suite -------------------------------------------------------------


def check_card_roundtrip(max_balls: int) -> CheckResult:
    bound = min(max_balls, 8)
    ok = True
    checked = 0
    for k in range(1, 4):
        expected = genfun.card_series(k, bound)
        for b in range(bound + 1):
            embeddings = enumerate_embeddings(b, k)
            cards = [embedding_to_card(e) for e in embeddings]
            if len(set(cards)) != len(cards):
                ok = False
            back = [card_to_embedding(c, capacity=k) for c in cards]
            if back != embeddings:
                ok = False
            if len(cards) != expected[b]:
                ok = False
            checked += len(cards)
    return _result(
        "bijections.card_roundtrip", ok, f"{checked} cards, balls <= {bound}, k <= 3"
    )


def check_sequence_roundtrip(max_balls: int, max_capacity: int, max_length: int) -> CheckResult:
    bound_b = min(max_balls, 5)
    bound_k = min(max_capacity, 2)
    ok = True
    total = 0
    for k in range(1, bound_k + 1):
        for l in range(1, max_length + 1):
            for b in range(bound_b + 1):
                for cs in enumerate_sequences(b, k, l):
                    total += 1
                    if embedding_to_sequence(sequence_to_embedding(cs)) != cs:
                        ok = False
                for se in enumerate_sequence_embeddings(b, k, l):
                    if sequence_to_embedding(embedding_to_sequence(se)) != se:
                        ok = False
    return _result(
        "bijections.sequence_roundtrip", ok, f"{total} sequences both ways"
    )


def check_embedding_census(max_balls: int, max_capacity: int, max_length: int) -> CheckResult:
    ok = True
    for k in range(1, min(max_capacity, 2) + 1):
        for l in range(1, max_length + 1):
            for b in range(min(max_balls, 6) + 1):
                if len(enumerate_sequence_embeddings(b, k, l)) != count_sequences(b, k, l):
                    ok = False
    return _result(
        "bijections.embedding_census", ok, "embedding census equals transfer counts"
    )


def check_sequence_example() -> CheckResult:
    cs = CardSequence(WORKED_EXAMPLE_CARDS, 4)
    se = sequence_to_embedding(cs)
    expected = parse_sequence_embedding(WORKED_EXAMPLE_TEXT, 4)
    ok = se == expected and embedding_to_sequence(se) == cs
    return _result("bijections.sequence_example", ok, "worked 4-card example")


# -- driver ----------------------------------------------------------------------


def run_suite(
    suite: str,
    max_balls: int = 5,
    max_capacity: int = 2,
    max_length: int = 3,
) -> list[CheckResult]:
    """Run one suite (or `all`); results come back sorted by check id."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    catalog = {
        "oeis": [
            check_oeis_capacity2,
            check_oeis_capacity3,
            check_oeis_unbounded,
        ],
        "identities": [
            check_homogeneous_reduction,
            check_operator_reduction,
            check_q_substitution,
            check_q_derivative_shift,
            check_partial_sum,
        ],
        "cross": [
            lambda: check_methods(max_balls, max_capacity, max_length),
            check_single_card_formulas,
            check_operator_vs_extraction,
            lambda: check_stabilization(max_balls, max_length),
            lambda: check_monotonicity(max_balls, max_capacity, max_length),
        ],
        "bijections": [
            lambda: check_card_roundtrip(max_balls),
            lambda: check_sequence_roundtrip(max_balls, max_capacity, max_length),
            lambda: check_embedding_census(max_balls, max_capacity, max_length),
            check_sequence_example,
        ],
    }
    if suite == "all":
        checks = [fn for name in ("identities", "cross", "bijections", "oeis") for fn in catalog[name]]
    else:
        checks = catalog[suite]
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(lambda fn: fn(), checks))
    return sorted(results, key=lambda r: r.check_id)
