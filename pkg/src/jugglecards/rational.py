"""Exact univariate polynomials and rational functions in x, series expansion,
and minimal linear recurrence fitting over the rationals.

Coefficients are ints or fractions.Fraction; nothing here is ever floating
point.  Recurrence fitting solves exact linear systems and only reports a
recurrence after verifying it against every supplied term from its start
index on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm


class Polynomial:
    """Coefficient list indexed by degree; trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return len(self.coeffs) == len(other.coeffs) and all(
                a == b for a, b in zip(self.coeffs, other.coeffs)
            )
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: "Polynomial"):
        """Exact quotient and remainder over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        den = [Fraction(c) for c in other.coeffs]
        dq = len(rem) - len(den)
        if dq < 0:
            return Polynomial(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = den[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(den) - 1] / lead
            quo[i] = c
            if c:
                for j, d in enumerate(den):
                    rem[i + j] -= c * d
        return Polynomial(quo), Polynomial(rem)

    def divides(self, other: "Polynomial") -> bool:
        """True iff self divides other exactly (over the rationals)."""
        if self.is_zero():
            return other.is_zero()
        _, rem = other.divmod(self)
        return rem.is_zero()

    def primitive(self) -> "Polynomial":
        """Integer-coefficient multiple with content 1 and positive lead."""
        if self.is_zero():
            return Polynomial()
        fracs = [Fraction(c) for c in self.coeffs]
        scale = _int_lcm(*(f.denominator for f in fracs))
        ints = [int(f * scale) for f in fracs]
        g = 0
        for c in ints:
            g = _int_gcd(g, abs(c))
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return Polynomial(ints)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive integer gcd via the Euclidean algorithm over the rationals."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero():
        return Polynomial()
    return a.primitive()


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two polynomials in x."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ZeroDivisionError("zero denominator")

    def expansion_equal(self, other: "RationalFunction") -> bool:
        """True iff the two fractions agree as formal series (cross-multiply)."""
        return (
            self.numerator * other.denominator == other.numerator * self.denominator
        )


def reduce(rf: RationalFunction) -> RationalFunction:
    """Cancel the gcd, clear to jointly-primitive integer coefficients, and
    normalize the denominator's constant term to +1.

    The single scale applied to numerator and denominator is shared, so the
    value of the fraction never changes.
    """
    num, den = rf.numerator, rf.denominator
    if num.is_zero():
        return RationalFunction(Polynomial(), Polynomial([1]))
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, _ = num.divmod(g)
        den, _ = den.divmod(g)
    num, den = _joint_integer_form(num, den)
    lead = den[0] if den[0] != 0 else den.coeffs[-1]
    if lead < 0:
        num, den = -num, -den
    return RationalFunction(num, den)


def _joint_integer_form(num: Polynomial, den: Polynomial):
    fracs = [Fraction(c) for c in num.coeffs] + [Fraction(c) for c in den.coeffs]
    scale = _int_lcm(*(f.denominator for f in fracs))
    ni = [int(Fraction(c) * scale) for c in num.coeffs]
    di = [int(Fraction(c) * scale) for c in den.coeffs]
    g = 0
    for c in ni + di:
        g = _int_gcd(g, abs(c))
    return Polynomial([c // g for c in ni]), Polynomial([c // g for c in di])


def expand(rf: RationalFunction, order: int) -> list[int]:
    """Series coefficients 0..order of numerator/denominator.

    The denominator's constant term must be +1 or -1 so the expansion stays
    integral.
    """
    den0 = rf.denominator[0]
    if den0 not in (1, -1):
        raise ValueError(f"denominator constant term must be a unit, got {den0}")
    num, den = rf.numerator, rf.denominator
    out = []
    for n in range(order + 1):
        acc = Fraction(num[n])
        for i in range(1, min(n, den.degree) + 1):
            acc -= Fraction(den[i]) * out[n - i]
        acc /= den0
        if acc.denominator != 1:
            raise ArithmeticError("non-integral expansion coefficient")
        out.append(int(acc))
    return out


# -- recurrence fitting ------------------------------------------------------


@dataclass(frozen=True)
class Recurrence:
    """a_n = coeffs[0]*a_{n-1} + ... + coeffs[order-1]*a_{n-order}, valid for
    every index >= valid_from in the data it was fitted on."""

    order: int
    coeffs: tuple[Fraction, ...]
    valid_from: int

    def char_poly(self) -> Polynomial:
        """Denominator polynomial 1 - c1*x - ... - cd*x^d."""
        return Polynomial([1] + [-c for c in self.coeffs])

    def satisfied_by(self, seq, start: int | None = None) -> bool:
        """Check the recurrence against every term of seq from start on."""
        if start is None:
            start = self.valid_from
        terms = [Fraction(v) for v in seq]
        if start < self.order:
            return False
        for n in range(start, len(terms)):
            predicted = sum(
                c * terms[n - 1 - i] for i, c in enumerate(self.coeffs)
            )
            if predicted != terms[n]:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [str(c) for c in self.coeffs],
            "valid_from": self.valid_from,
            "char_poly": [str(c) for c in self.char_poly().coeffs],
        }


def _solve_all_equations(rows, rhs):
    """Solution of an overdetermined exact linear system satisfying every
    equation, or None.  Free variables are set to 0.
    """
    m, n = len(rows), len(rows[0])
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][col]
        aug[r] = [v / inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        sol[col] = aug[i][n]
    for row, b in zip(rows, rhs):
        if sum(Fraction(v) * s for v, s in zip(row, sol)) != Fraction(b):
            return None
    return sol


def fit_recurrence(seq, max_order: int = 16) -> Recurrence | None:
    """Minimal-order linear recurrence fitting seq exactly, or None.

    Searches orders 1..max_order and, per order, the smallest start index
    from which the recurrence holds for every remaining term, requiring at
    least order+1 equations.  Reliable detection wants roughly
    len(seq) >= 2*max_order + 4 terms; shorter input just caps the
    detectable order.
    """
    terms = [Fraction(v) for v in seq]
    n = len(terms)
    for d in range(1, min(max_order, (n - 1) // 2) + 1):
        for start in range(d, n - d):
            rows = [
                [terms[m - i] for i in range(1, d + 1)] for m in range(start, n)
            ]
            rhs = [terms[m] for m in range(start, n)]
            sol = _solve_all_equations(rows, rhs)
            if sol is not None:
                return Recurrence(order=d, coeffs=tuple(sol), valid_from=start)
    return None
