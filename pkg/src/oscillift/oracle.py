"""Independent ground-truth checks for lift solutions.

The recurrence oracle rebuilds Q_n = P_n + a1 P_{n-1} + ... + a_k P_{n-k}
as explicit coefficient vectors and re-derives the three-term recurrence of
the Q family by polynomial division, completely independently of the closed
forms in the solver.  With rational inputs everything is exact; otherwise
the computation runs in mpmath at the working precision and "zero" means
below 10^-20 relative to the coefficient scale.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
import numpy as np
import scipy.linalg

from . import polyops
from .numeric import (EPS_ZERO, chebyshev_points, is_exact, to_mpf, working_dps)
from .recurrence import (DefinitenessError, PeriodicRecurrence,
                         coefficient_vectors, eval_monic, orthonormal_table,
                         symmetrize)

HP_REMAINDER_TOL = mpmath.mpf("1e-20")


@dataclass
class OracleReport:
    ok: bool
    first_failure: Optional[int]
    failure_kind: Optional[str]
    beta_derived: dict
    gamma_derived: dict
    detail: str = ""

    @property
    def derived(self) -> list:
        """[(beta_n, gamma_n)] with gamma_0 = None."""
        n_max = max(self.beta_derived) if self.beta_derived else -1
        return [(self.beta_derived.get(n), self.gamma_derived.get(n))
                for n in range(n_max + 1)]


def _exact_inputs(P: PeriodicRecurrence, values) -> bool:
    return P.is_exact_family() and all(is_exact(v) for v in values)


def derive_q_recurrence(P: PeriodicRecurrence, a: Sequence, n_max: int,
                        head: Optional[Sequence] = None) -> OracleReport:
    """Re-derive the recurrence of the lifted family from scratch.

    a = (a_1, ..., a_k) defines Q_n for n >= k+1.  Without a candidate head
    the low-order Q_j are produced by downward division; with one, the head
    polynomials are built from the candidate coefficients (gamma head taken
    from P) and every relation becomes a check.
    """
    k = len(a)
    if k < 1:
        raise ValueError("need at least one lift coefficient")
    if n_max < k + 2:
        raise ValueError("n_max too small to constrain anything")
    exact = _exact_inputs(P, list(a) + list(head or ()))
    if exact:
        return _derive_impl(P, a, n_max, head, exact=True)
    with mpmath.workdps(working_dps()):
        return _derive_impl(P, a, n_max, head, exact=False)


def _derive_impl(P, a, n_max, head, exact: bool) -> OracleReport:
    k = len(a)
    if exact:
        conv = Fraction
        Ps = coefficient_vectors(P, n_max + 1)
    else:
        conv = to_mpf
        Ps = coefficient_vectors(P, n_max + 1, numtype=to_mpf)
    tol = HP_REMAINDER_TOL
    av = [conv(x) for x in a]

    Q: dict[int, list] = {}
    for n in range(k + 1, n_max + 2):
        q = list(Ps[n])
        for i, ai in enumerate(av, start=1):
            q = polyops.padd(q, polyops.pscale(Ps[n - i], ai))
        Q[n] = q

    beta_d: dict[int, object] = {}
    gamma_d: dict[int, object] = {}
    failures: list[tuple[int, str, str]] = []

    def is_zero_poly(p, scale) -> bool:
        if exact:
            return all(c == 0 for c in p)
        s = max(1.0, float(scale))
        return all(abs(c) <= tol * s for c in p)

    def relation(n):
        """R = x Q_n - Q_{n+1}; returns (beta_n, S) with S = R - beta_n Q_n."""
        R = polyops.psub(polyops.pmul_x(Q[n]), Q[n + 1])
        bn = polyops.coeff(R, n)
        S = polyops.psub(R, polyops.pscale(Q[n], bn))
        return bn, S, polyops.pmax_abs(polyops.pmul_x(Q[n]))

    if head is not None:
        hv = [conv(x) for x in head]
        if len(hv) != k + 1:
            raise ValueError(f"candidate head must have {k + 1} entries")
        Q[0] = [conv(1)]
        Q[1] = [-hv[0], conv(1)]
        for j in range(2, k + 1):
            gj = conv(P.gamma(j - 1))
            Q[j] = polyops.psub(
                polyops.psub(polyops.pmul_x(Q[j - 1]),
                             polyops.pscale(Q[j - 1], hv[j - 1])),
                polyops.pscale(Q[j - 2], gj))
        first_check = 1
    else:
        # downward derivation of Q_k .. Q_0
        for n in range(k + 1, 0, -1):
            bn, S, scale = relation(n)
            gn = polyops.coeff(S, n - 1)
            beta_d[n], gamma_d[n] = bn, gn
            if n >= 2:
                if gn == 0 or (not exact and abs(gn) <= tol * max(1.0, scale)):
                    return OracleReport(False, n, "gamma_zero", beta_d, gamma_d,
                                        f"derived gamma_{n} vanishes")
                Q[n - 1] = [polyops.coeff(S, i) / gn for i in range(n)]
            else:
                Q[0] = [conv(1)]
        first_check = k + 2

    for n in range(first_check, n_max + 1):
        bn, S, scale = relation(n)
        gn = polyops.coeff(S, n - 1) if n >= 1 else None
        beta_d[n], gamma_d[n] = bn, gn
        rem = polyops.psub(S, polyops.pscale(Q[n - 1], gn))
        if not is_zero_poly(rem, scale):
            failures.append((n, "remainder",
                             f"relation at n={n} has nonzero remainder"))
            break
    beta_d[0] = -Q[1][0]
    ok = not failures
    first, kind, detail = (failures[0] if failures else (None, None, ""))
    return OracleReport(ok, first, kind, beta_d, gamma_d, detail)


def exact_recurrence_oracle(P: PeriodicRecurrence, a1, a2, n_max: int,
                            head: Optional[Sequence] = None) -> OracleReport:
    """Recurrence oracle for the k=2 lift, with expected-value comparison.

    Derives (or checks, when a candidate head is supplied) the recurrence of
    Q and compares it against the lift contract: gamma unchanged for all
    n >= 1 and beta unchanged for n >= 3.  first_failure is the index of the
    earliest violated relation or mismatched coefficient.
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    rep = derive_q_recurrence(P, (a1, a2), n_max, head=head)
    exact = _exact_inputs(P, [a1, a2] + list(head or ()))
    mismatches = []

    with mpmath.workdps(working_dps()):

        def same(x, y, scale) -> bool:
            if x is None or y is None:
                return False
            if exact:
                return Fraction(x) == Fraction(y)
            return abs(x - to_mpf(y)) <= HP_REMAINDER_TOL * max(1.0, abs(float(scale)))

        for n in sorted(rep.gamma_derived):
            if n < 1:
                continue
            expected = P.gamma(n)
            if not same(rep.gamma_derived[n], expected, expected):
                mismatches.append((n, "gamma_mismatch",
                                   f"derived gamma_{n} = {rep.gamma_derived[n]} "
                                   f"!= {expected}"))
        for n in sorted(rep.beta_derived):
            if n < 3:
                continue
            expected = P.beta(n)
            if not same(rep.beta_derived[n], expected, expected):
                mismatches.append((n, "beta_mismatch",
                                   f"derived beta_{n} = {rep.beta_derived[n]} "
                                   f"!= {expected}"))
        if head is not None:
            for n, claimed in enumerate(head):
                got = rep.beta_derived.get(n)
                if got is not None and not same(got, claimed, claimed):
                    mismatches.append((n, "head_mismatch",
                                       f"derived beta_{n} = {got} != claimed {claimed}"))
    events = mismatches[:]
    if rep.first_failure is not None:
        events.append((rep.first_failure, rep.failure_kind, rep.detail))
    if not events:
        return rep
    events.sort(key=lambda e: e[0])
    first, kind, detail = events[0]
    return OracleReport(False, first, kind, rep.beta_derived, rep.gamma_derived, detail)


def linear_relation_residual(P: PeriodicRecurrence, sol, n_max: int = 20,
                             samples=None) -> float:
    """Largest relative defect of Q_n = P_n + a1 P_{n-1} + a2 P_{n-2}.

    Q_n is evaluated from the solution's claimed recurrence; the right side
    from P's.  samples may be an iterable of points or (count, lo, hi).
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if samples is None:
        xs = chebyshev_points(50)
    elif isinstance(samples, tuple) and len(samples) == 3:
        xs = chebyshev_points(int(samples[0]), samples[1], samples[2])
    else:
        xs = list(samples)
    a1, a2 = sol.a1, sol.a2
    q = sol.q_family
    worst = 0.0
    for x in xs:
        pm2, pm1 = None, None
        for n in range(0, n_max + 1):
            pn = eval_monic(P, n, x)
            if n >= 3:
                qn = eval_monic(q, n, x)
                rhs = pn + a1 * pm1 + a2 * pm2
                rel = abs(float(qn) - float(rhs)) / max(1.0, abs(float(qn)))
                worst = max(worst, rel)
            pm2, pm1 = pm1, pn
    return worst


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray


def gauss_quadrature(family: PeriodicRecurrence, order: int) -> QuadratureRule:
    """Nodes and weights from the symmetric Jacobi matrix eigendecomposition."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if not family.is_positive:
        raise DefinitenessError("quadrature requires a positive-definite family")
    sym = symmetrize(family, n_max=order)
    diag = np.array([float(family.beta(n)) for n in range(order)])
    off = np.array([float(b) for b in sym.b[:order - 1]])
    if order == 1:
        return QuadratureRule(nodes=diag.copy(), weights=np.array([1.0]))
    nodes, vecs = scipy.linalg.eigh_tridiagonal(diag, off)
    weights = vecs[0, :] ** 2
    return QuadratureRule(nodes=nodes, weights=weights)


def quadrature_orthogonality(family: PeriodicRecurrence, n_max: int,
                             order: Optional[int] = None) -> tuple[float, float]:
    """(max off-diagonal Gram entry, max diagonal deviation from 1)."""
    if order is None:
        order = 2 * n_max + 2
    if order < n_max + 1:
        raise ValueError("quadrature order must exceed n_max")
    rule = gauss_quadrature(family, order)
    table = orthonormal_table(family, n_max, rule.nodes)
    gram = (table * rule.weights) @ table.T
    off = gram - np.diag(np.diag(gram))
    return float(np.max(np.abs(off))), float(np.max(np.abs(np.diag(gram) - 1.0)))


# ---------------------------------------------------------------------------
# general-k structural constraints


@dataclass
class ConstraintReport:
    ok: bool
    alternative: str                    # "A", "B", or "violated@<n>"
    gamma_preserved: bool
    gamma_formula_matches: bool
    beta_tail_matches: bool
    gamma_periodic: bool
    oracle: OracleReport
    notes: list = field(default_factory=list)


def k_general_constraints(P: PeriodicRecurrence, a: Sequence, k: int) -> ConstraintReport:
    """Structural conditions for a degree-k lift against a period-k family."""
    a = list(a)
    if len(a) != k:
        raise ValueError("need exactly k lift coefficients")
    if a[-1] == 0:
        raise ValueError("a_k must be nonzero")
    n_hi = 3 * k + 4
    rep = derive_q_recurrence(P, a, n_hi + 1)
    a1 = a[0]
    exact = _exact_inputs(P, a)

    def same(x, y) -> bool:
        if x is None or y is None:
            return False
        if exact:
            return Fraction(x) == Fraction(y)
        return abs(float(x) - float(y)) <= 1e-9 * max(1.0, abs(float(y)))

    notes = []
    gamma_ok = all(same(rep.gamma_derived.get(n), P.gamma(n))
                   for n in range(1, n_hi + 1) if n in rep.gamma_derived)
    beta_ok = all(same(rep.beta_derived.get(n), P.beta(n))
                  for n in range(k + 1, n_hi + 1) if n in rep.beta_derived)
    formula_ok = True
    for n in range(k + 1, n_hi + 1):
        if n not in rep.gamma_derived:
            continue
        predicted = P.gamma(n) + a1 * (P.beta(n - 1) - P.beta(n))
        if predicted == 0:
            notes.append(f"gamma-tilde formula vanishes at n={n}")
            formula_ok = False
        if not same(rep.gamma_derived[n], predicted):
            formula_ok = False
            notes.append(f"derived gamma_{n} != gamma_n + a1 (beta_{n-1} - beta_n)")
    # data-side condition on indices >= k+2
    data_ok = True
    for n in range(k + 2, n_hi + 1):
        lhs = P.gamma(n) - P.gamma(n - k)
        rhs = a1 * (P.beta(n - 1) - P.beta(n))
        if not same(lhs, rhs):
            data_ok = False
            notes.append(f"gamma_n - gamma_{{n-k}} != a1 (beta_{{n-1}} - beta_n) at n={n}")
            break
    if a1 == 0 or (not exact and abs(float(a1)) <= 1e-12):
        alternative = "A"
    else:
        alternative = "B"
        for n in range(k, n_hi + 1):
            if not same(P.beta(n), P.beta(k)):
                alternative = f"violated@{n}"
                notes.append(f"alternative B needs beta_n = beta_k; fails at n={n}")
                break
    periodic_ok = all(same(P.gamma(n), P.gamma(n - k))
                      for n in range(k + 2, n_hi + 1))
    ok = (rep.ok and gamma_ok and beta_ok and formula_ok and data_ok
          and periodic_ok and not alternative.startswith("violated"))
    return ConstraintReport(ok=ok, alternative=alternative,
                            gamma_preserved=gamma_ok,
                            gamma_formula_matches=formula_ok,
                            beta_tail_matches=beta_ok,
                            gamma_periodic=periodic_ok,
                            oracle=rep, notes=notes)


def variant_count(k: int) -> int:
    """Number of zero-patterns available to the intermediate coefficients."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return 2 ** (k - 1)


# ---------------------------------------------------------------------------
# per-solution verification


@dataclass
class VerificationReport:
    solution_id: str
    oracle_ok: bool
    oracle_first_failure: Optional[int]
    linear_residual: float
    gram_offdiag: Optional[float]
    gram_diagdev: Optional[float]
    verdict: str                       # "pass" | "fail"
    reasons: list


def verify_solution(P: PeriodicRecurrence, sol, n_max: int = 12,
                    residual_tol: float = 1e-9,
                    gram_tol: float = 1e-10,
                    solution_id: str = "") -> VerificationReport:
    """Full independent verification of one lift solution."""
    reasons = []
    rep = exact_recurrence_oracle(P, sol.a1, sol.a2, n_max,
                                  head=sol.beta_tilde)
    if not rep.ok:
        reasons.append(f"oracle: {rep.failure_kind} at n={rep.first_failure}")
    resid = linear_relation_residual(P, sol, n_max=max(n_max, 10))
    if resid > residual_tol:
        reasons.append(f"linear relation residual {resid:.3e} > {residual_tol:.1e}")
    off = diag = None
    if P.is_positive:
        try:
            off, diag = quadrature_orthogonality(sol.q_family, n_max=15, order=32)
            if off > gram_tol or diag > gram_tol:
                reasons.append(f"Gram deviations off={off:.3e} diag={diag:.3e}")
        except (DefinitenessError, ValueError) as exc:
            reasons.append(f"quadrature: {exc}")
    return VerificationReport(solution_id=solution_id,
                              oracle_ok=rep.ok,
                              oracle_first_failure=rep.first_failure,
                              linear_residual=resid,
                              gram_offdiag=off, gram_diagdev=diag,
                              verdict="pass" if not reasons else "fail",
                              reasons=reasons)
