"""Command-line front end: solve, verify, spectrum, report.

Exit codes: 0 success, 1 input error, 2 empty result, 3 verification
failure.  Identical inputs produce identical outputs apart from the
timestamp field.
"""
from __future__ import annotations

import argparse
import datetime
import json
import sys

import mpmath
import numpy as np

from . import jsonio
from .jsonio import SchemaError
from .lift import WrongCaseError, enumerate_solutions, solve_case_I, solve_case_II, \
    solve_case_III, solve_case_IV, solve_case_V, solve_case_VI, solve_case_VII_VIII
from .numeric import number_from_json, working_dps
from .oracle import verify_solution
from .oscillator import algebras_equal, build_truncation, hamiltonian_spectrum
from .recurrence import DefinitenessError


def _timestamp() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc


def _parse_grid(spec):
    """Grid values from a JSON number/list or an 'a:b:step' string."""
    if spec is None:
        return []
    if isinstance(spec, str):
        parts = spec.split(":")
        if len(parts) != 3:
            raise SchemaError("grid must be 'start:stop:step'")
        a, b, step = (float(p) for p in parts)
        if step <= 0:
            raise SchemaError("grid step must be positive")
        out = []
        x = a
        while x <= b + 1e-12:
            out.append(round(x, 12))
            x += step
        return out
    if isinstance(spec, (int, float)):
        return [number_from_json(spec)]
    if isinstance(spec, list):
        return [number_from_json(v) for v in spec]
    raise SchemaError("grid must be a number, list, or 'a:b:step' string")


def _solve_from_config(cfg: dict, lambda_grid=None, theta_grid=None,
                       paper_literal=None):
    family = jsonio.family_from_json(cfg.get("family"))
    request = cfg.get("request", {}) or {}
    case = request.get("case", "all")
    literal = bool(request.get("paper_literal", False)) if paper_literal is None \
        else paper_literal
    lams = _parse_grid(lambda_grid if lambda_grid is not None
                       else request.get("lambda"))
    thetas = _parse_grid(theta_grid if theta_grid is not None
                         else request.get("theta"))
    if case == "all":
        sols = enumerate_solutions(family, lams, thetas, paper_literal=literal,
                                   include_inadmissible=True)
    else:
        single = {"I": lambda: [solve_case_I(family, literal)],
                  "II": lambda: [solve_case_II(family, literal)],
                  "III": lambda: solve_case_III(family, literal),
                  "IV": lambda: solve_case_IV(family, literal)}
        multi = {"V": solve_case_V, "VI": solve_case_VI}
        if case in single:
            sols = single[case]()
        elif case in multi:
            sols = [s for lam in lams for s in multi[case](family, lam, literal)]
        elif case in ("VII", "VIII"):
            sols = [s for th in thetas
                    for s in solve_case_VII_VIII(family, th, literal)]
        else:
            raise SchemaError(f"unknown case {case!r}")
    return family, sols


def cmd_solve(args) -> int:
    cfg = _load_json(args.input)
    family, sols = _solve_from_config(cfg, args.lambda_grid, args.theta_grid,
                                      True if args.paper_literal else None)
    admissible = [s for s in sols if s.admissible]
    rejected = [s for s in sols if not s.admissible]
    payload = {
        "family": jsonio.family_to_json(family),
        "config_echo": cfg,
        "solutions": [jsonio.solution_to_json(s) for s in admissible],
        "rejected": [{"case": s.case_tag, "a1": jsonio.number_to_json(s.a1),
                      "a2": jsonio.number_to_json(s.a2), "reason": s.reason}
                     for s in rejected],
        "timestamp": _timestamp(),
    }
    _emit(args, payload, kind="solutions")
    return 0 if admissible else 2


def cmd_verify(args) -> int:
    data = _load_json(args.input)
    if "solutions" not in data or "family" not in data:
        raise SchemaError("verify input must be a solve output file")
    family = jsonio.family_from_json(data["family"])
    sols = [jsonio.solution_from_json(s) for s in data["solutions"]]
    if not sols:
        print("nothing to verify", file=sys.stderr)
        return 2
    tol = (data.get("config_echo", {}).get("tolerances", {}) or {})
    reports = [verify_solution(family, sol, n_max=12,
                               residual_tol=float(tol.get("residual", 1e-9)),
                               solution_id=f"{sol.case_tag}#{i}")
               for i, sol in enumerate(sols)]
    payload = {"reports": [jsonio.verification_to_json(r) for r in reports],
               "all_pass": all(r.verdict == "pass" for r in reports),
               "timestamp": _timestamp()}
    _emit(args, payload, kind="verification")
    return 0 if payload["all_pass"] else 3


def cmd_spectrum(args) -> int:
    data = _load_json(args.input)
    cfg = data.get("config_echo", data)
    fam_obj = data.get("family", cfg.get("family"))
    family = jsonio.family_from_json(fam_obj)
    if not family.is_positive:
        print("spectrum requires positive-definite family", file=sys.stderr)
        return 1
    dim = args.dim or int(cfg.get("truncation_dim", 64))
    if dim < 2:
        print("spectrum needs dim >= 2", file=sys.stderr)
        return 1
    trunc = build_truncation(family, dim)
    spec = hamiltonian_spectrum(trunc)
    payload = {"p": _spectrum_json(spec, dim), "q": [],
               "timestamp": _timestamp()}
    for i, sobj in enumerate(data.get("solutions", [])):
        sol = jsonio.solution_from_json(sobj)
        qspec = hamiltonian_spectrum(build_truncation(sol.q_family, dim))
        payload["q"].append({"solution": f"{sol.case_tag}#{i}",
                             "dump": _spectrum_json(qspec, dim),
                             "algebras_equal": algebras_equal(family, sol.q_family)})
    _emit(args, payload, kind="spectrum")
    return 0


def _spectrum_json(spec, dim) -> dict:
    return {"dim": dim,
            "eigenvalues": [float(x) for x in spec.eigenvalues],
            "closed_form": [float(x) for x in spec.closed_form],
            "max_rel_dev": spec.max_rel_dev}


def cmd_report(args) -> int:
    data = _load_json(args.input)
    lines = []
    if "solutions" in data:
        lines.append(f"admissible solutions: {len(data['solutions'])}")
        for s in data["solutions"]:
            lines.append(f"  case {s['case']}: a1={s['a1']} a2={s['a2']} "
                         f"beta_tilde={s['beta_tilde']}")
        for s in data.get("rejected", []):
            lines.append(f"  rejected {s['case']}: a1={s['a1']} a2={s['a2']} "
                         f"({s['reason']})")
    if "reports" in data:
        for r in data["reports"]:
            lines.append(f"  {r['solution']}: {r['verdict']}"
                         + (f" ({'; '.join(r['reasons'])})" if r["reasons"] else ""))
        lines.append(f"all pass: {data.get('all_pass')}")
    if "p" in data:
        lines.append(f"P spectrum max relative deviation: {data['p']['max_rel_dev']:.3e}")
        for q in data.get("q", []):
            lines.append(f"  {q['solution']}: algebras_equal={q['algebras_equal']} "
                         f"dev={q['dump']['max_rel_dev']:.3e}")
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _emit(args, payload: dict, kind: str):
    if getattr(args, "format", "json") == "text":
        body = _text_summary(payload, kind)
    else:
        body = jsonio.dumps(payload) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _text_summary(payload: dict, kind: str) -> str:
    lines = [f"== {kind} =="]
    if kind == "solutions":
        for s in payload["solutions"]:
            lines.append(f"case {s['case']}: a1={s['a1']} a2={s['a2']} "
                         f"beta_tilde={s['beta_tilde']}")
        for s in payload["rejected"]:
            lines.append(f"rejected {s['case']}: {s['reason']}")
    elif kind == "verification":
        for r in payload["reports"]:
            lines.append(f"{r['solution']}: {r['verdict']}")
        lines.append(f"all pass: {payload['all_pass']}")
    elif kind == "spectrum":
        lines.append(f"P: max_rel_dev={payload['p']['max_rel_dev']:.3e}")
        for q in payload["q"]:
            lines.append(f"{q['solution']}: algebras_equal={q['algebras_equal']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscillift",
        description="Solve and verify oscillator-algebra-preserving lifts of "
                    "orthogonal polynomial families.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("solve", cmd_solve), ("verify", cmd_verify),
                     ("spectrum", cmd_spectrum), ("report", cmd_report)):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True)
        p.add_argument("--output")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--dim", type=int)
        p.add_argument("--paper-literal", action="store_true",
                       dest="paper_literal")
        p.add_argument("--lambda-grid", dest="lambda_grid")
        p.add_argument("--theta-grid", dest="theta_grid")
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    mpmath.mp.dps = max(mpmath.mp.dps, working_dps())
    try:
        return args.func(args)
    except (SchemaError, WrongCaseError, DefinitenessError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
