"""Monic orthogonal polynomial families with eventually periodic recurrences.

A family is stored as head coefficients followed by a periodic tail:

    x P_n = P_{n+1} + beta_n P_n + gamma_n P_{n-1},   P_0 = 1, P_1 = x - beta_0

with beta_n drawn from ``beta_head`` for small n and cycling through
``beta_tail`` (period k) afterwards; likewise gamma_n (indexed from 1).
The standard shape has a two-entry beta head and a one-entry gamma head;
longer heads are allowed so that lifted families (whose first few
coefficients break the pattern) can be represented exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .numeric import Number, as_fraction, is_exact, num_sqrt, to_mpf, working_dps
from . import polyops


class DefinitenessError(ValueError):
    """Operation requires a positive-definite family."""


@dataclass(frozen=True)
class PeriodicRecurrence:
    k: int
    beta_head: tuple
    beta_tail: tuple
    gamma_head: tuple
    gamma_tail: tuple
    definiteness: str = "positive"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("tail period k must be >= 1")
        if len(self.beta_tail) != self.k or len(self.gamma_tail) != self.k:
            raise ValueError("tail length must equal k")
        if len(self.beta_head) < 2:
            raise ValueError("beta head needs at least beta_0, beta_1")
        if len(self.gamma_head) < 1:
            raise ValueError("gamma head needs at least gamma_1")
        if self.definiteness not in ("positive", "quasi"):
            raise ValueError("definiteness must be 'positive' or 'quasi'")

        def norm(xs):
            # integers become Fractions so later divisions stay exact
            return tuple(Fraction(x) if isinstance(x, int) and not isinstance(x, bool)
                         else x for x in xs)

        object.__setattr__(self, "beta_head", norm(self.beta_head))
        object.__setattr__(self, "beta_tail", norm(self.beta_tail))
        object.__setattr__(self, "gamma_head", norm(self.gamma_head))
        object.__setattr__(self, "gamma_tail", norm(self.gamma_tail))
        for g in self.gamma_head + self.gamma_tail:
            if g == 0:
                raise ValueError("all gamma_n must be nonzero (quasi-definiteness)")
            if self.definiteness == "positive" and not (g > 0):
                raise DefinitenessError("positive-definite family needs gamma_n > 0")

    @classmethod
    def from_lists(cls, beta: Sequence, gamma: Sequence, k: int = 2,
                   definiteness: str = "positive") -> "PeriodicRecurrence":
        """Build from flat lists: the last k entries of each are the tail."""
        beta = list(beta)
        gamma = list(gamma)
        if len(beta) < k + 2:
            raise ValueError(f"beta needs at least {k + 2} entries for k={k}")
        if len(gamma) < k + 1:
            raise ValueError(f"gamma needs at least {k + 1} entries for k={k}")
        return cls(k=k, beta_head=tuple(beta[:-k]), beta_tail=tuple(beta[-k:]),
                   gamma_head=tuple(gamma[:-k]), gamma_tail=tuple(gamma[-k:]),
                   definiteness=definiteness)

    def beta(self, n: int):
        if n < 0:
            raise ValueError("beta index must be >= 0")
        h = len(self.beta_head)
        if n < h:
            return self.beta_head[n]
        return self.beta_tail[(n - h) % self.k]

    def gamma(self, n: int):
        if n < 1:
            raise ValueError("gamma_0 is undefined; the symmetrized convention "
                             "b_{-1}=0 lives in symmetrize()")
        h = len(self.gamma_head)
        if n - 1 < h:
            return self.gamma_head[n - 1]
        return self.gamma_tail[(n - 1 - h) % self.k]

    def beta_list(self, count: int) -> list:
        return [self.beta(n) for n in range(count)]

    def gamma_list(self, count: int) -> list:
        """gamma_1 .. gamma_count."""
        return [self.gamma(n) for n in range(1, count + 1)]

    @property
    def is_positive(self) -> bool:
        return self.definiteness == "positive"

    def is_exact_family(self) -> bool:
        return all(is_exact(c) for c in
                   self.beta_head + self.beta_tail + self.gamma_head + self.gamma_tail)

    def head_span(self) -> int:
        """First index from which both coefficient streams are periodic."""
        return max(len(self.beta_head), len(self.gamma_head) + 1)

    def with_definiteness(self, definiteness: str) -> "PeriodicRecurrence":
        return PeriodicRecurrence(self.k, self.beta_head, self.beta_tail,
                                  self.gamma_head, self.gamma_tail, definiteness)


def coefficients_at(family: PeriodicRecurrence, n: int):
    """(beta_n, gamma_n); gamma is only defined for n >= 1."""
    return family.beta(n), family.gamma(n)


def eval_monic(family: PeriodicRecurrence, n: int, x):
    """Value of the monic P_n at x by forward recurrence.

    Inexact inputs at degree > 30 are promoted to mpmath to keep the fast
    coefficient growth from eating the working precision.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    inexact = not (is_exact(x) and family.is_exact_family())
    if inexact and n > 30 and not isinstance(x, mpmath.mpf):
        with mpmath.workdps(max(working_dps(), 40)):
            val = eval_monic(family, n, to_mpf(x))
            return float(val)
    if n == 0:
        return 1 if not inexact else x * 0 + 1
    prev, cur = 1, x - family.beta(0)
    for m in range(1, n):
        prev, cur = cur, (x - family.beta(m)) * cur - family.gamma(m) * prev
    return cur


def coefficient_vector(family: PeriodicRecurrence, n: int) -> list[Fraction]:
    """Exact coefficient list of P_n (ascending, leading coefficient 1)."""
    return coefficient_vectors(family, n)[n]


def coefficient_vectors(family: PeriodicRecurrence, n_max: int, numtype=None) -> list[list]:
    """Coefficient lists of P_0..P_{n_max}.

    With numtype=None all family coefficients must be exact rationals and the
    result is exact; pass a converter (e.g. mpmath.mpf) for inexact work.
    """
    if n_max < 0:
        raise ValueError("degree must be >= 0")
    if numtype is None:
        conv = as_fraction
        one = Fraction(1)
    else:
        conv = numtype
        one = numtype(1)
    out = [[one]]
    if n_max >= 1:
        out.append([-conv(family.beta(0)), one])
    for m in range(1, n_max):
        bm = conv(family.beta(m))
        gm = conv(family.gamma(m))
        shifted = polyops.pmul_x(out[m])
        nxt = polyops.psub(polyops.psub(shifted, polyops.pscale(out[m], bm)),
                           polyops.pscale(out[m - 1], gm))
        out.append(nxt)
    return out


@dataclass(frozen=True)
class JacobiMatrix:
    """Monic-convention tridiagonal matrix: unit superdiagonal."""
    dim: int
    diagonal: tuple
    subdiagonal: tuple

    def to_dense(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim))
        for i, b in enumerate(self.diagonal):
            m[i, i] = float(b)
        for i, g in enumerate(self.subdiagonal):
            m[i + 1, i] = float(g)
            m[i, i + 1] = 1.0
        return m


def jacobi_matrix(family: PeriodicRecurrence, dim: int) -> JacobiMatrix:
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    return JacobiMatrix(dim=dim,
                        diagonal=tuple(family.beta(n) for n in range(dim)),
                        subdiagonal=tuple(family.gamma(n) for n in range(1, dim)))


@dataclass(frozen=True)
class OrthonormalCoefficients:
    """Symmetrized recurrence data: b_n = sqrt(gamma_{n+1}), P_n = alpha_n phi_n."""
    b: tuple
    alpha: tuple

    def b_at(self, n: int):
        if n == -1:
            return 0.0
        return self.b[n]


def symmetrize(family: PeriodicRecurrence, n_max: int = 64) -> OrthonormalCoefficients:
    """Orthonormal form of a positive-definite family up to index n_max."""
    if not family.is_positive:
        raise DefinitenessError("symmetrization requires positive-definite family")
    gammas = family.gamma_list(n_max + 1)
    for g in gammas:
        if not (g > 0):
            raise DefinitenessError("symmetrization requires positive-definite family")
    b = tuple(num_sqrt(g) for g in gammas)
    alpha = [1]
    acc = 1
    for n in range(1, n_max + 1):
        acc = acc * gammas[n - 1]
        alpha.append(num_sqrt(acc) if is_exact(acc) else math.sqrt(float(acc)))
    return OrthonormalCoefficients(b=b, alpha=tuple(alpha))


def alpha_product_form(family: PeriodicRecurrence, n: int) -> float:
    """Monic-to-orthonormal factor via the m/s split of the index.

    Only valid for the standard head shape (single gamma head entry); the
    running-product form in symmetrize() agrees with it there and also covers
    the general shapes.
    """
    if len(family.gamma_head) != 1:
        raise ValueError("m/s product form assumes a single-entry gamma head")
    if n == 0:
        return 1.0
    g = lambda j: float(family.gamma(j))
    if n == 1:
        return math.sqrt(g(1))
    k = family.k
    m, s = divmod(n - 2, k)
    m, s = m + 1, s + 2          # n = (m-1)k + s with s in 2..k+1
    first = 1.0
    for j in range(2, s + 1):
        first *= g(j)
    second = 1.0
    for j in range(s + 1, k + 2):
        second *= g(j)
    return math.sqrt(g(1)) * first ** (m / 2.0) * second ** ((m - 1) / 2.0)


def eval_orthonormal(family: PeriodicRecurrence, n: int, x) -> float:
    """Value of the orthonormal phi_n at x (b_{-1} = 0 convention)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    sym = symmetrize(family, n_max=n + 1)
    xf = float(x)
    prev, cur = 0.0, 1.0
    for m in range(n):
        bm = float(sym.b[m])
        bprev = float(sym.b[m - 1]) if m >= 1 else 0.0
        prev, cur = cur, ((xf - float(family.beta(m))) * cur - bprev * prev) / bm
    return cur


def orthonormal_table(family: PeriodicRecurrence, n_max: int, xs) -> np.ndarray:
    """Matrix phi_n(x_j), shape (n_max+1, len(xs)); vectorized over nodes."""
    sym = symmetrize(family, n_max=n_max + 1)
    xs = np.asarray(xs, dtype=float)
    table = np.empty((n_max + 1, xs.size))
    table[0] = 1.0
    if n_max >= 1:
        table[1] = (xs - float(family.beta(0))) / float(sym.b[0])
    for m in range(1, n_max):
        bm = float(sym.b[m])
        bprev = float(sym.b[m - 1])
        table[m + 1] = ((xs - float(family.beta(m))) * table[m]
                        - bprev * table[m - 1]) / bm
    return table
