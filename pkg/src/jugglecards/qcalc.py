"""The homogeneous raising operator and the classical q-derivative.

The raising operator with index m is linear over monomials: a monomial whose
z_m-exponent is n gets multiplied by the complete homogeneous sum
h_n(1, z1, ..., z_{m-1}); the z_m-exponent itself is untouched.  For m = 2
this is exactly "multiply by z, then take the q-derivative" with q = z1.
Reindexed variants (arbitrary multiplier variables acting on an arbitrary
target) are obtained by conjugating with a variable permutation.
"""

from __future__ import annotations

from functools import lru_cache

from .compositions import homogeneous
from .series import Profile, TruncatedSeries


@lru_cache(maxsize=None)
def _h_multiplier(profile: Profile, m: int, n: int) -> TruncatedSeries:
    values = [1] + [
        TruncatedSeries.variable(profile, f"z{i}") for i in range(1, m)
    ]
    h = homogeneous(n, values)
    if isinstance(h, int):
        return TruncatedSeries.constant(profile, h)
    return h


def apply_homogeneous_operator(m: int, series: TruncatedSeries) -> TruncatedSeries:
    """Multiply every monomial with z_m-exponent n by h_n(1, z1, ..., z_{m-1})."""
    if m < 2:
        raise ValueError("operator index m must be at least 2")
    profile = series.profile
    target = profile.index(f"z{m}")
    for i in range(1, m):
        profile.index(f"z{i}")
    slices: dict[int, dict] = {}
    for exps, coeff in series.terms.items():
        slices.setdefault(exps[target], {})[exps] = coeff
    result = TruncatedSeries(profile)
    for n, terms in sorted(slices.items()):
        chunk = TruncatedSeries(profile, terms)
        result = result + chunk * _h_multiplier(profile, m, n)
    return result


def conjugated_homogeneous_operator(
    series: TruncatedSeries, multipliers: list[str], target: str
) -> TruncatedSeries:
    """The raising operator with an explicit multiplier list and target
    variable, implemented as permutation / canonical operator / inverse
    permutation."""
    profile = series.profile
    z_names = [name for name in profile.names if name.startswith("z")]
    roles = list(multipliers) + [target]
    if len(set(roles)) != len(roles):
        raise ValueError("multiplier and target variables must be distinct")
    m = len(roles)
    slots = [f"z{i}" for i in range(1, len(z_names) + 1)]
    if sorted(z_names) != sorted(slots):
        raise ValueError("profile z-variables must be named z1..zN")
    forward = {role: slots[i] for i, role in enumerate(roles)}
    leftover_slots = [s for s in slots if s not in forward.values()]
    for name in z_names:
        if name not in forward:
            forward[name] = leftover_slots.pop(0)
    inverse = {v: k for k, v in forward.items()}
    moved = apply_homogeneous_operator(m, series.permuted(forward))
    return moved.permuted(inverse)


def q_derivative(series: TruncatedSeries, var: str, q: str) -> TruncatedSeries:
    """Classical q-derivative in `var`: z^n -> (1 + q + ... + q^(n-1)) z^(n-1)."""
    profile = series.profile
    iv = profile.index(var)
    iq = profile.index(q)
    if iv == iq:
        raise ValueError("var and q must differ")
    terms: dict[tuple[int, ...], int] = {}
    q_order = profile.orders[iq]
    for exps, coeff in series.terms.items():
        n = exps[iv]
        if n == 0:
            continue
        base = list(exps)
        base[iv] = n - 1
        for j in range(n):
            if base[iq] + j > q_order:
                break
            e2 = list(base)
            e2[iq] += j
            e2 = tuple(e2)
            s = terms.get(e2, 0) + coeff
            if s:
                terms[e2] = s
            else:
                terms.pop(e2, None)
    return TruncatedSeries(profile, terms)
