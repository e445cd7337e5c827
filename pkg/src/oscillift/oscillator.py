"""Truncated ladder-operator realizations and algebra checks.

Over the orthonormal basis of a positive-definite family the raising and
lowering operators have entries sqrt(2) b_n on the first off-diagonals,
the number operator is diag(0..D-1), and the diagonal structure function
B has entries gamma_n (gamma_0 = 0).  Finite sections satisfy the defining
relations exactly away from the last basis vector, whose raised image
leaves the truncated space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numeric import near_zero
from .recurrence import DefinitenessError, PeriodicRecurrence


@dataclass(frozen=True)
class OscillatorTruncation:
    dim: int
    b: tuple
    a_plus: np.ndarray
    a_minus: np.ndarray
    number_op: np.ndarray
    B_diag: np.ndarray
    hamiltonian_diag: np.ndarray


def build_truncation(family: PeriodicRecurrence, dim: int) -> OscillatorTruncation:
    if dim < 2:
        raise ValueError("truncation needs dim >= 2")
    if not family.is_positive:
        raise DefinitenessError("oscillator realization requires positive gammas")
    gammas = [float(family.gamma(n)) for n in range(1, dim + 1)]
    if any(g <= 0 for g in gammas):
        raise DefinitenessError("oscillator realization requires positive gammas")
    b = tuple(math.sqrt(g) for g in gammas)
    a_plus = np.zeros((dim, dim))
    for n in range(dim - 1):
        a_plus[n + 1, n] = math.sqrt(2.0) * b[n]
    a_minus = a_plus.T.copy()
    number_op = np.diag(np.arange(dim, dtype=float))
    B_diag = np.array([0.0] + gammas[:dim - 1])
    ham = np.array([2.0 * (B_diag[n] + gammas[n]) for n in range(dim)])
    return OscillatorTruncation(dim=dim, b=b, a_plus=a_plus, a_minus=a_minus,
                                number_op=number_op, B_diag=B_diag,
                                hamiltonian_diag=ham)


@dataclass(frozen=True)
class RelationReport:
    lower_raise: float       # a- a+ - 2 B(N+I), interior max |entry|
    raise_lower: float       # a+ a- - 2 B(N)
    commutator_plus: float   # [N, a+] - a+
    commutator_minus: float  # [N, a-] + a-

    def max_deviation(self) -> float:
        return max(self.lower_raise, self.raise_lower,
                   self.commutator_plus, self.commutator_minus)


def verify_algebra_relations(t: OscillatorTruncation) -> RelationReport:
    """Max deviations of the defining relations on interior indices 0..D-2."""
    if t.dim < 3:
        raise ValueError("relation check needs dim >= 3")
    D = t.dim
    b2 = np.array([bi * bi for bi in t.b])
    BN = np.diag(t.B_diag)
    BN1 = np.diag(b2[:D])
    r1 = t.a_minus @ t.a_plus - 2.0 * BN1
    r2 = t.a_plus @ t.a_minus - 2.0 * BN
    r3 = t.number_op @ t.a_plus - t.a_plus @ t.number_op - t.a_plus
    r4 = t.number_op @ t.a_minus - t.a_minus @ t.number_op + t.a_minus
    interior = slice(0, D - 1)
    return RelationReport(
        lower_raise=float(np.max(np.abs(r1[interior, interior]))),
        raise_lower=float(np.max(np.abs(r2[interior, interior]))),
        commutator_plus=float(np.max(np.abs(r3[interior, interior]))),
        commutator_minus=float(np.max(np.abs(r4[interior, interior]))))


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    closed_form: np.ndarray
    max_rel_dev: float       # over interior indices


def hamiltonian_spectrum(t: OscillatorTruncation) -> SpectrumReport:
    """Diagonal of a- a+ + a+ a- against 2(gamma_n + gamma_{n+1})."""
    H = t.a_minus @ t.a_plus + t.a_plus @ t.a_minus
    off = H - np.diag(np.diag(H))
    if np.max(np.abs(off)) > 1e-12 * max(1.0, float(np.max(np.abs(H)))):
        raise AssertionError("truncated quadratic Hamiltonian must be diagonal")
    eigs = np.diag(H).copy()
    closed = t.hamiltonian_diag
    interior = slice(0, t.dim - 1)
    dev = np.abs(eigs[interior] - closed[interior]) / np.abs(closed[interior])
    return SpectrumReport(eigenvalues=eigs, closed_form=closed,
                          max_rel_dev=float(np.max(dev)))


def algebras_equal(P: PeriodicRecurrence, Q: PeriodicRecurrence) -> bool:
    """Same oscillator algebra: gamma sequences agree for all n >= 1.

    Checked exactly on the heads plus one full combined period; the beta
    coefficients play no role.
    """
    span = max(P.head_span(), Q.head_span())
    n_hi = span + 2 * math.lcm(P.k, Q.k) + 1
    for n in range(1, n_hi + 1):
        if not _gamma_equal(P.gamma(n), Q.gamma(n)):
            return False
    return True


def _gamma_equal(x, y) -> bool:
    from .numeric import is_exact
    if is_exact(x) and is_exact(y):
        return x == y
    return float(x) == float(y)


def dimension_check(family: PeriodicRecurrence) -> str:
    """"finite-candidate" when b_n^2 fits (a0 + a2 n)(1 + n) exactly, else
    "infinite"."""
    if not family.is_positive:
        raise DefinitenessError("dimension criterion applies to positive families")
    n_hi = 2 * family.k + 3
    g = [float(family.gamma(n + 1)) for n in range(n_hi + 1)]   # b_n^2
    a0 = g[0]
    a2 = g[1] / 2.0 - a0
    for n in range(n_hi + 1):
        predicted = (a0 + a2 * n) * (1 + n)
        if abs(g[n] - predicted) > 1e-12 * max(1.0, abs(g[n]), abs(predicted)):
            return "infinite"
    return "finite-candidate"
