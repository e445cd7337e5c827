"""Dense univariate polynomial arithmetic over generic scalars.

Polynomials are lists of coefficients in ascending degree order.  All
operations work for Fraction, float and mpmath.mpf coefficients alike; with
Fraction inputs every result is exact.
"""
from __future__ import annotations


def trim(p: list) -> list:
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return p[:n]


def padd(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = out[i] + c
    return out


def psub(p: list, q: list) -> list:
    return padd(p, [-c for c in q])


def pscale(p: list, c) -> list:
    return [c * x for x in p]


def pmul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def pmul_x(p: list) -> list:
    """Multiply by x."""
    return [0] + list(p)


def peval(p: list, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pmax_abs(p: list) -> float:
    return max((abs(float(c)) for c in p), default=0.0)


def pderiv(p: list) -> list:
    return [i * c for i, c in enumerate(p)][1:]


def coeff(p: list, j: int):
    return p[j] if 0 <= j < len(p) else 0
