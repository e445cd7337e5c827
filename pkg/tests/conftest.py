"""Shared fixtures: known families and admissible-instance samplers.

The samplers construct rational families on which lifts provably exist, by
inverting the constraint system one variable at a time.  Each returned
instance is exact, so the oracle can certify it with zero remainder.
"""
import math
import random
from fractions import Fraction as F

import pytest

from oscillift import PeriodicRecurrence


def fam(beta, gamma, k=2, definiteness="positive"):
    return PeriodicRecurrence.from_lists([F(x) for x in beta],
                                         [F(x) for x in gamma],
                                         k=k, definiteness=definiteness)


# families used throughout the spec-example tests
@pytest.fixture
def family_case1():
    # beta1 != beta3; the unique a1 = 0 candidate has a2 = -4
    return fam([0, 1, 0, 2], [1, 1, 2])


@pytest.fixture
def family_case2():
    return fam([0, 0, 1, 0], [1, 2, 1])


@pytest.fixture
def family_free_tail():
    # constant-zero beta with beta3 = 1 breaking the tail
    return fam([0, 0, 0, 1], [1, 1, 1])


@pytest.fixture
def family_curve():
    # fully constant stratum with beta0 = 2: one-parameter lift family
    return fam([2, 0, 0, 0], [1, 1, 1])


@pytest.fixture
def family_offdiag_constant():
    # constant tail, beta1 != tail: finitely many lifts, none at a1 = 0
    return fam([0, 1, 2, 2], [1, 1, 1])


# rational admissible instances discovered by exact search: each tuple is
# (beta, gamma, a1, a2); all are positive-definite and oracle-exact
CASE_III_INSTANCES = [
    (["29/3", "4/3", 0, 0], ["35/9", 3, 3], F(-3), F(9, 4)),
    (["-43/3", "4/3", 0, 0], ["35/9", 3, 3], F(-3), F(9, 4)),
    (["64/3", "8/3", 0, 0], ["35/9", 3, 3], F(-3), F(9, 4)),
]

CASE_V_INSTANCES = [
    # lambda = 1/2  (a2 = (2/9) a1^2)
    ([0, "1/2", 0, 0], ["1/2", 1, 1], F(-3), F(2), F(1, 2)),
    (["10", "3/2", 0, 0], ["9/2", 3, 3], F(-3), F(2), F(1, 2)),
    # lambda = -1/3  (a2 = -(3/4) a1^2)
    (["11/15", "-1/2", 0, 0], ["4/3", 1, 1], F(-2), F(-3), F(-1, 3)),
]

CASE_VII_INSTANCES = [
    # theta = pi/2  (a2 = a1^2 / 2)
    ([7, 2, 0, 0], [6, 4, 4], F(-2), F(2)),
    ([-1, 2, 0, 0], [6, 4, 4], F(-2), F(2)),
    (["7/2", 1, 0, 0], ["3/2", 1, 1], F(-1), F(1, 2)),
]


def _rand_frac(rng, lo=-4, hi=4, dens=(1, 2, 3)):
    return F(rng.randint(lo, hi), rng.choice(dens))


def sample_case_I_family(rng: random.Random):
    """Positive-definite family admitting an exact a1 = 0 lift, plus its a2."""
    while True:
        b0 = _rand_frac(rng)
        b1 = _rand_frac(rng)
        b3 = _rand_frac(rng)
        g3 = F(rng.randint(1, 6), rng.choice((1, 2, 3)))
        a2 = F(rng.randint(1, 6), rng.choice((1, 2, 3)))
        r = F(rng.randint(0, 3), rng.choice((1, 2, 3, 4)))
        if b1 == b3:
            continue
        u = a2 * (b1 - b3) / g3
        base = b0 - b1 + u
        if abs(r) >= abs(base):
            continue
        v = (base * base - r * r) / 4
        if v == 0:
            continue
        g1 = v * g3 / a2
        if g1 <= 0:
            continue
        b2 = b1 + (a2 * (b3 - b1) ** 2 / g3 - g1 + g3) / (b3 - b1)
        A = u * g1 + v * b0 - (b2 + u) * v
        if A == 0:
            continue
        for sign in (1, -1):
            den = base + sign * r
            if den == 0:
                continue
            g2 = A * den / (2 * v)
            if g2 <= 0:
                continue
            family = fam([b0, b1, b2, b3], [g1, g2, g3])
            return family, a2


def sample_case_II_family(rng: random.Random):
    while True:
        b0, b1 = _rand_frac(rng), _rand_frac(rng)
        b2 = _rand_frac(rng)
        if b2 == b0:
            continue
        g1 = F(rng.randint(1, 5), rng.choice((1, 2)))
        g2 = F(rng.randint(1, 5), rng.choice((1, 2)))
        d = b2 - b0
        a2 = g2 * (b1 - b0) / d - g2 ** 2 / d ** 2
        if a2 == 0:
            continue
        return fam([b0, b1, b2, b1], [g1, g2, g1]), a2


def sample_curve_family(rng: random.Random):
    """Fully constant stratum plus rational points on its lift curve."""
    while True:
        B = _rand_frac(rng, -2, 2, (1, 2))
        G = F(rng.randint(1, 4), rng.choice((1, 2)))
        d = _rand_frac(rng, -3, 3, (1, 2))
        if d == 0:
            continue
        family = fam([B + d, B, B, B], [G, G, G])
        points = []
        for _ in range(4):
            a2 = _rand_frac(rng, -4, 4, (1, 2, 3))
            if a2 == 0 or a2 == G:
                continue
            a1 = a2 * G * (1 - d * d / G + a2 * d * d / (G * G)) / (d * (G - a2))
            if a1 == 0:
                continue
            points.append((a1, a2))
        if points:
            return family, points


def sample_offdiag_constant_family(rng: random.Random):
    """Constant-tail family with beta1 off the tail value."""
    while True:
        B = _rand_frac(rng, -2, 2, (1, 2))
        b1 = _rand_frac(rng, -2, 2, (1, 2))
        if b1 == B:
            continue
        b0 = _rand_frac(rng, -2, 2, (1, 2))
        g1 = F(rng.randint(1, 4), rng.choice((1, 2)))
        G = F(rng.randint(1, 4), rng.choice((1, 2)))
        return fam([b0, b1, B, B], [g1, G, G])
