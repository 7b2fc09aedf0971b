"""Evaluators for the counting series, each with an independent route.

Single cards (length 1) have three routes: coefficient extraction from a
bivariate truncated series, and two exact rational closed forms over
(1 - x - ... - x^k)^(k+1) whose numerators come from an alternating sum over
compositions of k, respectively from binomial coefficients.  Unbounded
capacity has its own rational form plus a three-term recurrence.  Card
sequences of any length use the raising-operator pipeline on an
(l+1)-variable truncated series.
"""

from __future__ import annotations

from .compositions import (
    compositions,
    ext_binomial,
    homogeneous,
    parts_at_least_two,
)
from .errors import BudgetExceededError
from .qcalc import apply_homogeneous_operator
from .rational import Polynomial, RationalFunction, expand, reduce
from .series import Profile, TruncatedSeries, extract_z_top

DEFAULT_MAX_BOX = 2_000_000


def card_series(capacity: int, order: int) -> list[int]:
    """Single-card counts for balls 0..order via [z^capacity] extraction.

    Inverts 1 - sum_{i=1..k} x^i (1 + z + ... + z^i), multiplies by the
    geometric series in z, and reads off the top z-coefficient.
    """
    k = capacity
    if k < 1:
        raise ValueError("capacity must be positive")
    if order < 0:
        raise ValueError("order must be nonnegative")
    profile = Profile(("x", "z"), (order, k))
    word_weights = TruncatedSeries(
        profile, {(i, j): 1 for i in range(1, k + 1) for j in range(i + 1)}
    )
    z = TruncatedSeries.variable(profile, "z")
    integrand = (1 - z).invert() * (1 - word_weights).invert()
    return integrand.slice_at({"z": k}).univariate_coefficients()


def _gap_polynomial(k: int) -> Polynomial:
    """1 - x - x^2 - ... - x^k."""
    return Polynomial([1] + [-1] * k)


def rational_by_compositions(capacity: int) -> RationalFunction:
    """Closed form as an alternating sum over the compositions of capacity,
    signed by the number of parts >= 2, over (1 - x - ... - x^k)^(k+1)."""
    k = capacity
    if k < 1:
        raise ValueError("capacity must be positive")
    q = _gap_polynomial(k)
    numerator = Polynomial()
    for comp in compositions(k):
        power = k - len(comp)
        sign = -1 if parts_at_least_two(comp) % 2 else 1
        term = Polynomial([0] * power + [sign]) * q**power
        numerator = numerator + term
    return reduce(RationalFunction(numerator, q ** (k + 1)))


def rational_by_binomials(capacity: int) -> RationalFunction:
    """Closed form with the composition sum collapsed into extended binomial
    coefficients; reduces to the same fraction as rational_by_compositions."""
    k = capacity
    if k < 1:
        raise ValueError("capacity must be positive")
    q = _gap_polynomial(k)
    numerator = Polynomial()
    for r in range(1, k + 1):
        weight = 0
        for s in range(r + 1):
            sign = -1 if (r - s) % 2 else 1
            weight += sign * ext_binomial(r, s) * ext_binomial(k - r - 1, r - s - 1)
        if weight:
            term = Polynomial([0] * (k - r) + [weight]) * q ** (k - r)
            numerator = numerator + term
    return reduce(RationalFunction(numerator, q ** (k + 1)))


def infinite_capacity_rational() -> RationalFunction:
    """(1 - 2x + x^2) / (1 - 4x + 2x^2): unbounded-capacity single cards."""
    return RationalFunction(Polynomial([1, -2, 1]), Polynomial([1, -4, 2]))


def infinite_capacity_recurrence(order: int) -> list[int]:
    """Same counts by the recurrence a_b = 4 a_{b-1} - 2 a_{b-2} (b >= 3),
    seeded with 1, 2, 7."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    seed = [1, 2, 7]
    out = seed[: order + 1]
    while len(out) < order + 1:
        out.append(4 * out[-1] - 2 * out[-2])
    return out


def infinite_capacity_series(order: int) -> list[int]:
    """Unbounded-capacity counts, computed by both routes and cross-checked."""
    by_rational = expand(infinite_capacity_rational(), order)
    by_recurrence = infinite_capacity_recurrence(order)
    if by_rational != by_recurrence:
        raise ArithmeticError("rational expansion and recurrence disagree")
    return by_rational


def sequence_series(
    capacity: int,
    length: int,
    order: int,
    max_box: int = DEFAULT_MAX_BOX,
    z_order: int | None = None,
) -> list[int]:
    """Sequence counts for balls 0..order via the raising-operator pipeline.

    Builds 1/(2 - h_k(1, x, x*z1, ..., x*zl)) in a truncated box, applies the
    raising operators for indices l down to 2, multiplies the l geometric
    factors and extracts the coefficient of z1^k ... zl^k.

    z_order widens the z-truncation beyond its default k (the extraction
    needs no more than k, which the tests confirm by comparing both).
    """
    k, l = capacity, length
    if k < 1 or l < 1:
        raise ValueError("capacity and length must be positive")
    if order < 0:
        raise ValueError("order must be nonnegative")
    zo = k if z_order is None else z_order
    cells = (order + 1) * (zo + 1) ** l
    if cells > max_box:
        raise BudgetExceededError(
            f"series box needs {cells} cells, budget is {max_box}"
        )
    names = ("x",) + tuple(f"z{i}" for i in range(1, l + 1))
    profile = Profile(names, (order,) + (zo,) * l)
    x = TruncatedSeries.variable(profile, "x")
    zs = [TruncatedSeries.variable(profile, f"z{i}") for i in range(1, l + 1)]
    h = homogeneous(k, [1, x] + [x * z for z in zs])
    core = (2 - h).invert()
    for m in range(l, 1, -1):
        core = apply_homogeneous_operator(m, core)
    for z in zs:
        core = core * (1 - z).invert()
    return extract_z_top(core, k).univariate_coefficients()
