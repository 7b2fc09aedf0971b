"""Integer compositions and the small combinatorial helpers built on them.

A composition is stored as a plain tuple of positive ints; the empty tuple is
the unique composition of 0.  Tuples compare lexicographically, which is the
iteration order used everywhere.
"""

from __future__ import annotations

import math

Composition = tuple[int, ...]


def is_composition(parts) -> bool:
    """True iff every part is a positive integer."""
    return all(isinstance(p, int) and p >= 1 for p in parts)


def compositions(n: int) -> list[Composition]:
    """All compositions of n, in lexicographic order (2^(n-1) of them for n >= 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [()]
    out: list[Composition] = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def compositions_with_parts(n: int, r: int) -> list[Composition]:
    """All compositions of n into exactly r parts, in lexicographic order."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if r == 0:
        return [()] if n == 0 else []
    if r == 1:
        return [(n,)] if n >= 1 else []
    out: list[Composition] = []
    for first in range(1, n - r + 2):
        for rest in compositions_with_parts(n - first, r - 1):
            out.append((first,) + rest)
    return out


def compositions_bounded(n: int, max_part: int) -> list[Composition]:
    """All compositions of n with every part <= max_part, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part < 1:
        raise ValueError("max_part must be positive")
    if n == 0:
        return [()]
    out: list[Composition] = []
    for first in range(1, min(n, max_part) + 1):
        for rest in compositions_bounded(n - first, max_part):
            out.append((first,) + rest)
    return out


def count_compositions_bounded(n: int, max_part: int) -> int:
    """|compositions_bounded(n, max_part)| without materializing the list."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_part < 1:
        raise ValueError("max_part must be positive")
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        counts[m] = sum(counts[m - j] for j in range(1, min(m, max_part) + 1))
    return counts[n]


def parts_at_least_two(comp: Composition) -> int:
    """Number of parts >= 2."""
    return sum(1 for p in comp if p >= 2)


def ext_binomial(n: int, m: int) -> int:
    """Binomial coefficient extended so that C(-1,-1)=1 and every other
    out-of-range pair gives 0.

    The extension makes alternating-sum formulas over compositions work
    without boundary guards: C(-1,m)=C(n,-1)=1 exactly when the other index
    is also -1.
    """
    if n == -1 or m == -1:
        return 1 if n == m else 0
    if n < 0 or m < 0 or m > n:
        return 0
    return math.comb(n, m)


def homogeneous(n: int, values: list):
    """Complete homogeneous sum h_n over the given values: the sum of all
    degree-n products, i.e. sum over exponent tuples (i_1,...,i_m) with
    i_1+...+i_m = n of values[0]**i_1 * ... * values[-1]**i_m.  h_0 = 1.

    Values may be ints or TruncatedSeries (anything with ring arithmetic);
    results are exact, truncated when the inputs are truncated.
    Uses h_d(x_1..x_j) = h_d(x_1..x_{j-1}) + x_j * h_{d-1}(x_1..x_j).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not values:
        raise ValueError("values must be nonempty")
    if n == 0:
        return 1
    cur = [values[0] ** d for d in range(n + 1)]
    for v in values[1:]:
        for d in range(1, n + 1):
            cur[d] = cur[d] + v * cur[d - 1]
    return cur[n]
