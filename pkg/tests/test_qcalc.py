import random

import pytest

from jugglecards.qcalc import (
    apply_homogeneous_operator,
    conjugated_homogeneous_operator,
    q_derivative,
)
from jugglecards.series import Profile, TruncatedSeries


def zvars(profile):
    return {
        name: TruncatedSeries.variable(profile, name)
        for name in profile.names
    }


def test_operator_on_pure_power():
    profile = Profile(("z1", "z2"), (4, 4))
    v = zvars(profile)
    result = apply_homogeneous_operator(2, v["z2"] ** 3)
    expected = (1 + v["z1"] + v["z1"] ** 2 + v["z1"] ** 3) * v["z2"] ** 3
    assert result == expected


def test_operator_ignores_independent_series():
    profile = Profile(("z1", "z2"), (4, 4))
    v = zvars(profile)
    series = 5 + 2 * v["z1"] ** 2
    assert apply_homogeneous_operator(2, series) == series


def test_operator_three_variables():
    profile = Profile(("z1", "z2", "z3"), (3, 3, 3))
    v = zvars(profile)
    result = apply_homogeneous_operator(3, v["z3"] ** 2)
    h2 = (
        1 + v["z1"] + v["z2"] + v["z1"] ** 2 + v["z1"] * v["z2"] + v["z2"] ** 2
    )
    assert result == h2 * v["z3"] ** 2


def test_operator_requires_valid_index():
    profile = Profile(("z1", "z2"), (3, 3))
    v = zvars(profile)
    with pytest.raises(ValueError):
        apply_homogeneous_operator(1, v["z1"])
    with pytest.raises(KeyError):
        apply_homogeneous_operator(3, v["z1"])


def test_q_derivative_examples():
    profile = Profile(("q", "z"), (5, 5))
    z = TruncatedSeries.variable(profile, "z")
    q = TruncatedSeries.variable(profile, "q")
    assert q_derivative(z**3, "z", "q") == (1 + q + q**2) * z**2
    assert q_derivative(TruncatedSeries.constant(profile, 9), "z", "q") == 0


def test_operator_is_shifted_q_derivative():
    profile = Profile(("z1", "z2"), (9, 9))
    z2 = TruncatedSeries.variable(profile, "z2")
    for n in range(0, 9):
        lhs = apply_homogeneous_operator(2, z2**n)
        rhs = q_derivative(z2 ** (n + 1), "z2", "z1")
        assert lhs == rhs


def test_linearity():
    rng = random.Random(99)
    profile = Profile(("z1", "z2", "z3"), (3, 3, 3))

    def rand_series():
        return TruncatedSeries(
            profile,
            {
                (i, j, k): rng.randint(-6, 6)
                for i in range(4)
                for j in range(4)
                for k in range(4)
                if rng.random() < 0.25
            },
        )

    for m in (2, 3):
        for _ in range(10):
            a, b = rand_series(), rand_series()
            assert apply_homogeneous_operator(m, a + b) == apply_homogeneous_operator(
                m, a
            ) + apply_homogeneous_operator(m, b)


def test_substitution_identity():
    # the operator equals (f(z2) - z1 f(z1 z2)) / (1 - z1) on polynomials
    rng = random.Random(4242)
    profile = Profile(("z1", "z2"), (10, 8))
    z1 = TruncatedSeries.variable(profile, "z1")
    geometric = (1 - z1).invert()
    for _ in range(25):
        f = TruncatedSeries(
            profile, {(0, n): rng.randint(-9, 9) for n in range(9)}
        )
        lhs = apply_homogeneous_operator(2, f)
        rhs = (f - z1 * f.substitute_scaled("z2", "z1")) * geometric
        assert lhs == rhs


def test_operator_recursion_via_reindexing():
    # (z_{m-1} - z_m) D_{m+1} == z_{m-1} D(multipliers drop z_m)
    #                            - z_m D(multipliers swap z_{m-1} for z_m)
    rng = random.Random(31337)
    profile = Profile(("z1", "z2", "z3", "z4", "z5"), (4,) * 5)
    v = zvars(profile)
    for _ in range(25):
        a = TruncatedSeries(
            profile,
            {
                tuple(rng.randint(0, 4) for _ in range(5)): rng.randint(-9, 9)
                for _ in range(10)
            },
        )
        for m in (2, 3, 4):
            lhs = (v[f"z{m-1}"] - v[f"z{m}"]) * apply_homogeneous_operator(m + 1, a)
            keep = [f"z{i}" for i in range(1, m)]
            swap = [f"z{i}" for i in range(1, m - 1)] + [f"z{m}"]
            rhs = v[f"z{m-1}"] * conjugated_homogeneous_operator(
                a, keep, f"z{m+1}"
            ) - v[f"z{m}"] * conjugated_homogeneous_operator(a, swap, f"z{m+1}")
            assert lhs == rhs, m


def test_conjugated_operator_matches_plain_one():
    profile = Profile(("z1", "z2", "z3"), (3, 3, 3))
    v = zvars(profile)
    series = v["z3"] ** 2 * v["z1"]
    direct = apply_homogeneous_operator(3, series)
    conjugated = conjugated_homogeneous_operator(series, ["z1", "z2"], "z3")
    assert direct == conjugated
