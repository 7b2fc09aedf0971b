import math

from jugglecards.compositions import (
    compositions,
    compositions_bounded,
    compositions_with_parts,
    count_compositions_bounded,
    ext_binomial,
    homogeneous,
    parts_at_least_two,
)
from jugglecards.series import Profile, TruncatedSeries


def test_compositions_examples():
    assert compositions(2) == [(1, 1), (2,)]
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert compositions(0) == [()]


def test_composition_counts():
    for n in range(1, 13):
        assert len(compositions(n)) == 2 ** (n - 1)
        for r in range(0, n + 2):
            assert len(compositions_with_parts(n, r)) == ext_binomial(n - 1, r - 1)


def test_compositions_with_parts_examples():
    assert compositions_with_parts(2, 2) == [(1, 1)]
    assert compositions_with_parts(3, 2) == [(1, 2), (2, 1)]
    assert compositions_with_parts(2, 5) == []


def test_compositions_bounded_examples():
    assert compositions_bounded(2, 1) == [(1, 1)]
    assert compositions_bounded(3, 2) == [(1, 1, 1), (1, 2), (2, 1)]
    for k in (1, 2, 5):
        assert compositions_bounded(0, k) == [()]


def test_compositions_bounded_counts():
    for n in range(0, 10):
        for k in range(1, 5):
            assert count_compositions_bounded(n, k) == len(compositions_bounded(n, k))


def test_lists_are_duplicate_free_and_sorted():
    for n in range(0, 9):
        comps = compositions(n)
        assert comps == sorted(set(comps))
        assert all(sum(c) == n for c in comps)
        bounded = compositions_bounded(n, 2)
        assert bounded == [c for c in comps if all(p <= 2 for p in c)]


def test_parts_at_least_two():
    assert parts_at_least_two((2, 1)) == 1
    assert parts_at_least_two((1, 1, 1)) == 0
    assert parts_at_least_two((3, 2, 1, 4)) == 3
    assert parts_at_least_two(()) == 0


def test_ext_binomial_convention():
    assert ext_binomial(-1, -1) == 1
    assert ext_binomial(3, -1) == 0
    assert ext_binomial(-1, 3) == 0
    assert ext_binomial(4, 2) == 6
    assert ext_binomial(-2, -1) == 0
    assert ext_binomial(-2, -2) == 0
    assert ext_binomial(2, 5) == 0
    for n in range(0, 8):
        for m in range(0, n + 1):
            assert ext_binomial(n, m) == math.comb(n, m)


def test_ones_count_identity():
    # compositions of k into r parts with exactly s parts equal to 1
    for k in range(1, 9):
        for r in range(1, k + 1):
            comps = compositions_with_parts(k, r)
            for s in range(0, r + 1):
                expected = ext_binomial(r, s) * ext_binomial(k - r - 1, r - s - 1)
                actual = sum(1 for c in comps if c.count(1) == s)
                assert actual == expected, (k, r, s)


def test_homogeneous_scalars():
    assert homogeneous(0, [7, 9]) == 1
    assert homogeneous(2, [1, 1]) == 3
    assert homogeneous(3, [2]) == 8
    # brute-force oracle over exponent tuples
    import itertools

    values = [2, 3, 5]
    for n in range(0, 5):
        brute = 0
        for exps in itertools.product(range(n + 1), repeat=3):
            if sum(exps) == n:
                brute += 2 ** exps[0] * 3 ** exps[1] * 5 ** exps[2]
        assert homogeneous(n, values) == brute


def test_homogeneous_series_example():
    profile = Profile(("z1",), (4,))
    z1 = TruncatedSeries.variable(profile, "z1")
    h2 = homogeneous(2, [1, z1])
    assert h2 == TruncatedSeries(profile, {(0,): 1, (1,): 1, (2,): 1})


def test_homogeneous_matches_explicit_double_sum():
    # h_3(1, x, x*z) equals 1 + sum_{i=1..3} x^i sum_{j=0..i} z^j exactly
    profile = Profile(("x", "z"), (3, 3))
    x = TruncatedSeries.variable(profile, "x")
    z = TruncatedSeries.variable(profile, "z")
    lhs = homogeneous(3, [1, x, x * z])
    rhs = TruncatedSeries(
        profile, {(i, j): 1 for i in range(0, 4) for j in range(i + 1)}
    )
    assert lhs == rhs


def test_homogeneous_telescoping_identity():
    # (z_{m-1} - z_m) h_n(1, z1..zm) telescopes into two shorter sums
    for m in range(2, 6):
        profile = Profile(tuple(f"z{i}" for i in range(1, m + 1)), (9,) * m)
        zs = [TruncatedSeries.variable(profile, f"z{i}") for i in range(1, m + 1)]
        for n in range(0, 9):
            lhs = (zs[m - 2] - zs[m - 1]) * homogeneous(n, [1] + zs)
            rhs = zs[m - 2] * homogeneous(n, [1] + zs[: m - 1]) - zs[m - 1] * (
                homogeneous(n, [1] + zs[: m - 2] + [zs[m - 1]])
            )
            assert lhs == rhs, (m, n)
