"""Scalar helpers shared across the package.

Coefficients are plain Python numbers: int, fractions.Fraction, float, or
mpmath.mpf.  Exact (int/Fraction) inputs stay exact through every formula;
anything else is carried in floating point at the current mpmath precision.
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Union

import mpmath

Number = Union[int, Fraction, float, mpmath.mpf]

# default tolerances; the CLI can override via its config
EPS_ZERO = 1e-10
EPS_RESIDUAL = 1e-9
EPS_CASE = 1e-9

_DEFAULT_DPS = 50


def working_dps() -> int:
    """Decimal digits for high-precision paths (OSCILLIFT_PRECISION overrides)."""
    env = os.environ.get("OSCILLIFT_PRECISION")
    if env:
        try:
            return max(15, int(env))
        except ValueError:
            pass
    return _DEFAULT_DPS


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(xs) -> bool:
    return all(is_exact(x) for x in xs)


def as_fraction(x) -> Fraction:
    """Exact conversion; rejects floats (no silent dyadic reinterpretation)."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {type(x).__name__}: {x!r}")


def to_mpf(x) -> mpmath.mpf:
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / mpmath.mpf(x.denominator)
    return mpmath.mpf(x)


def num_float(x) -> float:
    return float(x)


def num_sqrt(x):
    """Square root staying exact on perfect rational squares."""
    if is_exact(x):
        f = Fraction(x)
        if f < 0:
            raise ValueError("square root of negative exact value")
        rn, rd = math.isqrt(f.numerator), math.isqrt(f.denominator)
        if rn * rn == f.numerator and rd * rd == f.denominator:
            return Fraction(rn, rd)
        return math.sqrt(float(f))
    if isinstance(x, mpmath.mpf):
        return mpmath.sqrt(x)
    return math.sqrt(x)


def near_zero(x, tol: float = EPS_ZERO, scale: float = 1.0) -> bool:
    """Zero test: exact values compare exactly, floats against tol*scale."""
    if is_exact(x):
        return x == 0
    return abs(x) <= tol * max(1.0, abs(scale))


def same_number(a, b, tol: float = EPS_CASE) -> bool:
    """Equality for case routing: exact inputs compare exactly."""
    if is_exact(a) and is_exact(b):
        return a == b
    fa, fb = float(a), float(b)
    return abs(fa - fb) <= tol * max(1.0, abs(fa), abs(fb))


def rational_snap(x, poly_coeffs=None, max_den: int = 10**6):
    """Snap a float/mpf to a nearby rational when it is an exact root.

    poly_coeffs (ascending, exact) certify the snap: only return the Fraction
    when it evaluates to exactly zero.
    """
    if is_exact(x):
        return x
    cand = Fraction(float(x)).limit_denominator(max_den)
    if poly_coeffs is not None:
        acc = Fraction(0)
        for c in reversed(list(poly_coeffs)):
            acc = acc * cand + Fraction(c)
        if acc == 0 and abs(float(cand) - float(x)) <= 1e-9 * (1 + abs(float(x))):
            return cand
        return x
    return x


def chebyshev_points(count: int, lo: float = -4.0, hi: float = 4.0) -> list[float]:
    """Chebyshev-distributed sample points on [lo, hi]."""
    mid, half = (hi + lo) / 2.0, (hi - lo) / 2.0
    return [mid + half * math.cos((2 * j + 1) * math.pi / (2 * count))
            for j in range(count)]


def number_to_json(x):
    """JSON encoding: exact -> "p/q" string, mpf -> decimal string, float -> float."""
    if isinstance(x, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, mpmath.mpf):
        return mpmath.nstr(x, mpmath.mp.dps, strip_zeros=False)
    return float(x)


def number_from_json(v) -> Number:
    if isinstance(v, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        s = v.strip()
        if "/" in s:
            return Fraction(s)
        if s.lstrip("+-").isdigit():
            return int(s)
        # long decimal strings round-trip through mpmath
        digits = sum(ch.isdigit() for ch in s)
        if digits > 17:
            return mpmath.mpf(s)
        return float(s)
    raise TypeError(f"cannot parse number from {v!r}")
