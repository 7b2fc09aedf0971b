"""Exact truncated multivariate power series with integer coefficients.

A series lives in a box: each variable has a truncation order and any
monomial with an exponent above its order is dropped.  All exponents are
nonnegative, so products only grow exponents and stagewise truncation agrees
with truncating once at the end.  Coefficients are Python ints (arbitrary
precision); there is no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ProfileMismatchError


@dataclass(frozen=True)
class Profile:
    """Variable names with per-variable truncation orders."""

    names: tuple[str, ...]
    orders: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.orders):
            raise ValueError("names and orders must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if any(o < 0 for o in self.orders):
            raise ValueError("truncation orders must be nonnegative")

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable named {name!r}") from None

    def in_box(self, exps: tuple[int, ...]) -> bool:
        return all(0 <= e <= o for e, o in zip(exps, self.orders))


class TruncatedSeries:
    """Sparse exponent-vector -> coefficient map over a fixed Profile."""

    __slots__ = ("profile", "terms")

    def __init__(self, profile: Profile, terms=None):
        self.profile = profile
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            n = len(profile.names)
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} has wrong arity")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if coeff == 0 or not profile.in_box(exps):
                    continue
                clean[exps] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, profile: Profile, c: int) -> "TruncatedSeries":
        zero = (0,) * len(profile.names)
        return cls(profile, {zero: c})

    @classmethod
    def variable(cls, profile: Profile, name: str) -> "TruncatedSeries":
        i = profile.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(profile.names)))
        return cls(profile, {exps: 1})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return TruncatedSeries.constant(self.profile, other)
        if isinstance(other, TruncatedSeries):
            if other.profile != self.profile:
                raise ProfileMismatchError(
                    f"profiles differ: {self.profile} vs {other.profile}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        out = TruncatedSeries.__new__(TruncatedSeries)
        out.profile = self.profile
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = TruncatedSeries.__new__(TruncatedSeries)
        out.profile = self.profile
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return TruncatedSeries(self.profile)
            out = TruncatedSeries.__new__(TruncatedSeries)
            out.profile = self.profile
            out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        orders = self.profile.orders
        a, b = self.terms, other.terms
        if len(b) < len(a):
            a, b = b, a
        terms: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                ok = True
                for x, o in zip(e, orders):
                    if x > o:
                        ok = False
                        break
                if not ok:
                    continue
                s = terms.get(e, 0) + ca * cb
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        out = TruncatedSeries.__new__(TruncatedSeries)
        out.profile = self.profile
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries.constant(self.profile, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse within the box; requires constant term +-1."""
        zero = (0,) * len(self.profile.names)
        c0 = self.terms.get(zero, 0)
        if c0 not in (1, -1):
            raise ValueError(f"constant term must be +1 or -1, got {c0}")
        # 1/a = c0 / (1 - r) with r = 1 - c0*a, which has no constant term,
        # so the geometric series terminates inside the box.
        one = TruncatedSeries.constant(self.profile, 1)
        r = one - self * c0
        acc = one
        power = one
        while True:
            power = power * r
            if not power.terms:
                break
            acc = acc + power
        return acc * c0

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> int:
        """Exact coefficient of the given exponent vector (must lie in the box)."""
        exps = tuple(exps)
        if len(exps) != len(self.profile.names):
            raise ValueError("exponent vector has wrong arity")
        if not self.profile.in_box(exps):
            raise ValueError(f"exponents {exps} outside the truncation box")
        return self.terms.get(exps, 0)

    def slice_at(self, assignments: dict[str, int]) -> "TruncatedSeries":
        """Coefficient of the given variable powers, as a series over the
        remaining variables.
        """
        idx = {self.profile.index(name): e for name, e in assignments.items()}
        for i, e in idx.items():
            if not 0 <= e <= self.profile.orders[i]:
                raise ValueError("requested exponent outside the truncation box")
        keep = [i for i in range(len(self.profile.names)) if i not in idx]
        sub = Profile(
            tuple(self.profile.names[i] for i in keep),
            tuple(self.profile.orders[i] for i in keep),
        )
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            if all(e[i] == v for i, v in idx.items()):
                terms[tuple(e[i] for i in keep)] = c
        return TruncatedSeries(sub, terms)

    def univariate_coefficients(self) -> list[int]:
        """Dense coefficient list for a single-variable series."""
        if len(self.profile.names) != 1:
            raise ValueError("series is not univariate")
        out = [0] * (self.profile.orders[0] + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    # -- structural transformations ----------------------------------------

    def substitute_scaled(self, var: str, multiplier: str) -> "TruncatedSeries":
        """Substitute var -> multiplier * var, i.e. add each var exponent onto
        the multiplier exponent.  Terms leaving the box are dropped.
        """
        iv = self.profile.index(var)
        im = self.profile.index(multiplier)
        if iv == im:
            raise ValueError("var and multiplier must differ")
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[im] += e[iv]
            e2 = tuple(e2)
            if self.profile.in_box(e2):
                terms[e2] = terms.get(e2, 0) + c
        return TruncatedSeries(self.profile, terms)

    def permuted(self, mapping: dict[str, str]) -> "TruncatedSeries":
        """Rename variables by a permutation; each renamed pair must share a
        truncation order so the profile is unchanged.
        """
        names = self.profile.names
        full = {n: mapping.get(n, n) for n in names}
        if sorted(full.values()) != sorted(names):
            raise ValueError("mapping is not a permutation of the variables")
        dest = [self.profile.index(full[n]) for n in names]
        for i, d in enumerate(dest):
            if self.profile.orders[i] != self.profile.orders[d]:
                raise ValueError("cannot permute variables with different orders")
        n = len(names)
        terms: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for i in range(n):
                e2[dest[i]] = e[i]
            terms[tuple(e2)] = c
        return TruncatedSeries(self.profile, terms)

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.profile.names),
            "trunc": list(self.profile.orders),
            "terms": [
                {"e": list(e), "c": str(c)} for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TruncatedSeries":
        profile = Profile(tuple(data["vars"]), tuple(data["trunc"]))
        terms = {tuple(t["e"]): int(t["c"]) for t in data["terms"]}
        return cls(profile, terms)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == TruncatedSeries.constant(self.profile, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.profile == other.profile and self.terms == other.terms

    def __hash__(self):
        return hash((self.profile, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "TruncatedSeries(0)"
        bits = []
        for e, c in sorted(self.terms.items())[:8]:
            mono = "*".join(
                f"{n}^{x}" for n, x in zip(self.profile.names, e) if x
            )
            bits.append(f"{c}{'*' + mono if mono else ''}")
        extra = "" if len(self.terms) <= 8 else f" + ... ({len(self.terms)} terms)"
        return f"TruncatedSeries({' + '.join(bits)}{extra})"


def extract_z_top(series: TruncatedSeries, k: int) -> TruncatedSeries:
    """Coefficient of z1^k * ... * zl^k as a univariate series in x."""
    zs = [n for n in series.profile.names if n != "x"]
    if "x" not in series.profile.names:
        raise ValueError("series has no x variable")
    return series.slice_at({z: k for z in zs})
