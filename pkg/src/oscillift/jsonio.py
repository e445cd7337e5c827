"""JSON schemas for families, solve requests, solutions and reports.

Numbers serialize losslessly: integers as-is, rationals as "p/q" strings,
high-precision values as decimal strings, ordinary floats as JSON floats.
"""
from __future__ import annotations

import json
from typing import Any

from .lift import LiftSolution, StructuralConstants
from .numeric import number_from_json, number_to_json
from .oracle import VerificationReport
from .recurrence import PeriodicRecurrence


class SchemaError(ValueError):
    """Input JSON does not match the expected schema."""


def family_to_json(fam: PeriodicRecurrence) -> dict:
    beta = list(fam.beta_head) + list(fam.beta_tail)
    gamma = list(fam.gamma_head) + list(fam.gamma_tail)
    return {"k": fam.k,
            "beta": [number_to_json(x) for x in beta],
            "gamma": [number_to_json(x) for x in gamma],
            "definiteness": fam.definiteness}


def family_from_json(obj: Any) -> PeriodicRecurrence:
    if not isinstance(obj, dict):
        raise SchemaError("family must be an object")
    try:
        k = int(obj.get("k", 2))
        beta = [number_from_json(v) for v in obj["beta"]]
        gamma = [number_from_json(v) for v in obj["gamma"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad family object: {exc}") from exc
    definiteness = obj.get("definiteness", "positive")
    if definiteness not in ("positive", "quasi"):
        raise SchemaError("definiteness must be 'positive' or 'quasi'")
    if len(beta) < k + 2 or len(gamma) < k + 1:
        raise SchemaError(f"need len(beta) >= {k + 2} and len(gamma) >= {k + 1}")
    try:
        return PeriodicRecurrence.from_lists(beta, gamma, k=k,
                                             definiteness=definiteness)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def constants_to_json(sc: StructuralConstants) -> dict:
    out = {}
    for name in ("s1", "s2", "s3", "w", "w_lambda", "lam", "theta", "C"):
        val = getattr(sc, name)
        out[name] = None if val is None else number_to_json(val)
    return out


def solution_to_json(sol: LiftSolution) -> dict:
    return {"case": sol.case_tag,
            "a1": number_to_json(sol.a1),
            "a2": number_to_json(sol.a2),
            "beta_tilde": [number_to_json(x) for x in sol.beta_tilde],
            "q_family": family_to_json(sol.q_family),
            "constants": constants_to_json(sol.constants),
            "admissible": sol.admissible,
            "reason": sol.reason}


def solution_from_json(obj: Any) -> LiftSolution:
    if not isinstance(obj, dict):
        raise SchemaError("solution must be an object")
    try:
        consts = obj.get("constants", {})
        sc = StructuralConstants(**{key: (None if consts.get(key) is None
                                          else number_from_json(consts[key]))
                                    for key in ("s1", "s2", "s3", "w",
                                                "w_lambda", "lam", "theta", "C")})
        return LiftSolution(
            case_tag=obj["case"],
            a1=number_from_json(obj["a1"]),
            a2=number_from_json(obj["a2"]),
            beta_tilde=tuple(number_from_json(x) for x in obj["beta_tilde"]),
            q_family=family_from_json(obj["q_family"]),
            constants=sc,
            admissible=bool(obj.get("admissible", True)),
            reason=obj.get("reason", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad solution object: {exc}") from exc


def verification_to_json(rep: VerificationReport) -> dict:
    return {"solution": rep.solution_id,
            "oracle_match": rep.oracle_ok,
            "oracle_first_failure": rep.oracle_first_failure,
            "residual": rep.linear_residual,
            "gram_offdiag": rep.gram_offdiag,
            "gram_diagdev": rep.gram_diagdev,
            "verdict": rep.verdict,
            "reasons": rep.reasons}


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
