"""Real roots of low-degree polynomials with exact or floating coefficients.

Roots are located as eigenvalues of the companion matrix and then polished
with Newton iterations at the working mpmath precision.  Exact rational
roots of exact polynomials are snapped back to Fractions so downstream
formulas can stay in exact arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np

from . import polyops
from .numeric import all_exact, rational_snap, to_mpf, working_dps

REAL_IM_TOL = 1e-9


def _companion_real_roots(desc: list[float]) -> list[float]:
    roots = np.roots(np.asarray(desc, dtype=float))
    keep = [r.real for r in roots if abs(r.imag) <= REAL_IM_TOL * (1 + abs(r.real))]
    return sorted(keep)


def real_roots(coeffs_ascending: list, polish: bool = True) -> list:
    """All real roots, ascending.  Multiple roots are returned once per
    numerical cluster (the companion spectrum keeps multiplicity, duplicates
    within 1e-9 relative are merged)."""
    p = polyops.trim(list(coeffs_ascending))
    if len(p) <= 1:
        return []
    if len(p) == 2:
        roots = [-_div(p[0], p[1])]
        return roots
    desc = [float(c) for c in reversed(p)]
    raw = _companion_real_roots(desc)
    merged: list[float] = []
    for r in raw:
        if merged and abs(r - merged[-1]) <= 1e-9 * (1 + abs(r)):
            continue
        merged.append(r)
    exact = all_exact(p)
    out = []
    for r in merged:
        val = _polish(p, r) if polish else mpmath.mpf(r)
        if exact:
            val = rational_snap(val, poly_coeffs=p)
        out.append(val)
    return out


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def _polish(p: list, x0: float):
    dp = polyops.pderiv(p)
    with mpmath.workdps(working_dps() + 10):
        pm = [to_mpf(c) for c in p]
        dm = [to_mpf(c) for c in dp]
        x = mpmath.mpf(x0)
        for _ in range(80):
            fx = polyops.peval(pm, x)
            dfx = polyops.peval(dm, x)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= mpmath.mpf(10) ** (-(working_dps() + 5)) * (1 + abs(x)):
                break
        return +x
