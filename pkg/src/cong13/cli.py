"""Command-line entry point: every construction and verification as a subcommand with JSON output.

Exit codes: 0 when the verification passes, 1 when it fails, 2 for usage or
input errors.  Rationals are written "num/den"; points are comma-separated.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .exactalg.serialize import parse_rational, rational_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(ValueError):
    """Malformed command-line input; reported with exit code 2."""


@dataclass
class CommandResult:
    command: str
    parameters: dict
    result: dict
    exit_code: int

    def to_json(self) -> dict:
        return {"command": self.command, "parameters": self.parameters, "result": self.result,
                "exit_code": self.exit_code}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


# ------------------------------------------------------------------ argument parsing


def rational(text: str) -> Fraction:
    try:
        return parse_rational(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def point(text: str, length: int | None = None) -> list[Fraction]:
    coords = [rational(c) for c in text.split(",")]
    if length is not None and len(coords) != length:
        raise InputError(f"expected {length} comma-separated coordinates, got {len(coords)}")
    return coords


def curve_arg(text: str):
    """A curve given by a label, by "a1,a2,a3,a4,a6", or by "a,b" for y^2 = x^3 + a x + b."""
    from .curvedata import CurveNotFound, get_curve
    from .elliptic import EllipticCurveQ, SingularCurve

    try:
        if "," in text:
            c = point(text)
            if len(c) == 2:
                return EllipticCurveQ.short(*c)
            if len(c) == 5:
                return EllipticCurveQ(*c)
            raise InputError("a curve needs 2 (a,b) or 5 (a1,a2,a3,a4,a6) coefficients")
        return get_curve(text).curve
    except CurveNotFound as exc:
        raise InputError(str(exc)) from exc
    except SingularCurve as exc:
        raise InputError(f"singular curve: {exc}") from exc


def _params(args: argparse.Namespace) -> dict:
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in ("func", "command"):
            continue
        out[k] = rational_str(v) if isinstance(v, Fraction) else v
    return out


# ------------------------------------------------------------------ subcommands


def cmd_verify_congruence(args) -> tuple[dict, int]:
    from .congruence import CONSISTENT, ramification_obstruction, trace_congruence_scan

    E, F = curve_arg(args.curve1), curve_arg(args.curve2)
    try:
        rep = trace_congruence_scan(E, F, args.n, args.bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"report": rep.to_json(), "obstruction": ramification_obstruction(E, F, args.n).to_json()}
    return out, EXIT_OK if rep.verdict == CONSISTENT else EXIT_FAIL


def _model(k: int, a: Fraction, b: Fraction):
    from .xpipeline import discriminant_d, model_for_curve

    if k not in (1, 2):
        raise InputError("k must be 1 or 2")
    if discriminant_d(a, b) == 0:
        raise InputError("4a^3 + 27b^2 = 0: the curve is singular")
    return model_for_curve(k, a, b)


def cmd_build_xe(args) -> tuple[dict, int]:
    from .xpipeline import model_to_json

    model = _model(args.k, args.a, args.b)
    bundle = model_to_json(model)
    if args.out:
        Path(args.out).write_text(json.dumps(bundle, indent=2, sort_keys=True) + "\n")
        return {"written": args.out, "pipeline_dims": list(model.dims)}, EXIT_OK
    return {"model": bundle}, EXIT_OK


def cmd_jmap(args) -> tuple[dict, int]:
    from .xpipeline import Cusp, jmap, model_from_json

    if args.model:
        try:
            model = model_from_json(json.loads(Path(args.model).read_text()))
        except (OSError, KeyError, ValueError) as exc:
            raise InputError(f"cannot read model bundle: {exc}") from exc
    else:
        if args.k is None or args.a is None or args.b is None:
            raise InputError("give --model or all of --k, --a, --b")
        model = _model(args.k, args.a, args.b)
    pt = point(args.point, 7)
    on = model.on_curve(pt)
    out = {"on_model": on, "k": model.k, "a": rational_str(model.a), "b": rational_str(model.b)}
    if not on:
        out["error"] = "the point does not lie on the model"
        return out, EXIT_FAIL
    try:
        out["j"] = rational_str(jmap(model, pt))
    except Cusp as exc:
        out["error"] = f"cusp: {exc}"
        return out, EXIT_FAIL
    return out, EXIT_OK


def cmd_surface(args) -> tuple[dict, int]:
    from .zsurface import SurfaceError, check_listed_curves, cover_membership
    from .selftest import criterion_8

    if args.selftest:
        details = criterion_8()
        curves = check_listed_curves()
        details["listed_curves"] = [v.to_json() for v in curves]
        passed = details.pop("passed") and all(v.passed for v in curves)
        return {"passed": passed, **details}, EXIT_OK if passed else EXIT_FAIL
    if args.k is None or args.point is None:
        raise InputError("give --k and --point, or --selftest")
    try:
        res = cover_membership(args.k, *point(args.point, 3))
    except SurfaceError as exc:
        raise InputError(str(exc)) from exc
    return res.to_json(), EXIT_OK


def cmd_family(args) -> tuple[dict, int]:
    from .congruence import CONSISTENT, trace_congruence_scan
    from .elliptic import tate_conductor
    from .qtfam import TABLES, FamilyError, family_curves, family_point_check, j_prime, minimal_pair
    from .qtfam.table import specialisation_row

    try:
        E, Ep = family_curves(args.kind, args.t)
        jp = j_prime(args.kind, args.t)
    except FamilyError as exc:
        raise InputError(str(exc)) from exc
    d, Em, Fm = minimal_pair(args.kind, args.t)
    rep = trace_congruence_scan(Em, Fm, 13, args.bound)
    out = {
        "E": E.to_json(), "E_prime": Ep.to_json(), "j_prime": rational_str(jp), "twist": d,
        "minimal_pair": [Em.to_json(), Fm.to_json()],
        "conductors": [tate_conductor(Em).conductor, tate_conductor(Fm).conductor],
        "scan": rep.to_json(),
    }
    passed = rep.verdict == CONSISTENT
    if any(Fraction(r[0]) == args.t for r in TABLES[args.kind]):
        row = specialisation_row(args.kind, args.t, args.bound)
        out["table_row"] = {"labels": [row.label, row.label_prime], "conductors_match": row.conductors_match,
                            "isogeny_degree": row.isogeny_degree, "passed": row.passed}
        passed = passed and row.passed
    if args.check_point:
        v = family_point_check(args.kind, args.t)
        out["point_check"] = v.to_json()
        passed = passed and v.passed
    return out, EXIT_OK if passed else EXIT_FAIL


def cmd_derive_g2(args) -> tuple[dict, int]:
    from .exactalg.serialize import poly_to_json
    from .qtfam import family_spec, g2_checks

    checks = g2_checks(args.kind)
    passed = checks["coefficients_match"] and checks["identity"]
    out = {"g2": poly_to_json(family_spec(args.kind).g2), "degree": checks["degree"],
           "coefficients_match": checks["coefficients_match"], "identity": checks["identity"],
           "published": {str(e): c for e, c in sorted(checks["published"].items())}}
    return out, EXIT_OK if passed else EXIT_FAIL


def cmd_invariant_dims(args) -> tuple[dict, int]:
    from .repgroup.invariants import invariant_dimension

    if args.m is not None:
        if args.m < 0 or (args.n is not None and args.n < 0):
            raise InputError("degrees must be non-negative")
        return {"kind": args.kind, "m": args.m, "n": args.n,
                "dimension": invariant_dimension(args.m, args.n, args.kind)}, EXIT_OK
    from .selftest import criterion_3

    details = criterion_3()
    passed = details.pop("passed")
    return {"passed": passed, **details}, EXIT_OK if passed else EXIT_FAIL


def cmd_appendix(args) -> tuple[dict, int]:
    from .sigma13 import sigma_membership

    if args.point:
        v = sigma_membership(*point(args.point, 3))
        return v.to_json(), EXIT_OK if v.member else EXIT_FAIL
    from .selftest import criterion_14

    details = criterion_14(stretch=not args.no_stretch)
    passed = details.pop("passed")
    return {"passed": passed, **details}, EXIT_OK if passed else EXIT_FAIL


def cmd_curve(args) -> tuple[dict, int]:
    from .curvedata import CurveNotFound, OfflineError, get_curve
    from .elliptic import tate_conductor, trace_sweep

    try:
        rec = get_curve(args.label)
    except (CurveNotFound, OfflineError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    E = rec.curve
    cd = tate_conductor(E)
    out = {"record": rec.to_json(), "conductor": cd.conductor, "minimal_model": cd.minimal.to_json(),
           "discriminant": rational_str(E.discriminant), "j": rational_str(E.j_invariant)}
    if args.traces:
        out["traces"] = [r.to_json() for r in trace_sweep(E, args.traces)]
    return out, EXIT_OK


def cmd_selftest(args) -> tuple[dict, int]:
    from .selftest import run_suite

    def progress(r):
        print(f"{r.line()}  ({r.seconds:.1f}s)", file=sys.stderr, flush=True)

    results = run_suite(args.suite, progress)
    passed = all(r.passed for r in results)
    return {"suite": args.suite, "passed": passed, "criteria": [r.to_json() for r in results]}, \
        EXIT_OK if passed else EXIT_FAIL


# ------------------------------------------------------------------ parser and dispatch


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1,0" or "-30,23/4,..." through as values rather than unknown options
        self._negative_number_matcher = re.compile(r"^-\d[\d/,\-]*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": message, "exit_code": EXIT_USAGE}), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _kind(text: str) -> str:
    if text not in ("dir", "skew"):
        raise argparse.ArgumentTypeError("kind must be 'dir' or 'skew'")
    return text


def _rational_type(text: str) -> Fraction:
    try:
        return rational(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cong13", description="Exact constructions and checks for 13-congruent elliptic curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp_ = sub.add_parser(name, help=help_)
        sp_.set_defaults(func=fn)
        return sp_

    s = add("verify-congruence", cmd_verify_congruence, "trace scan and ramification obstruction for two curves")
    s.add_argument("curve1", help="label, 'a1,a2,a3,a4,a6' or 'a,b'")
    s.add_argument("curve2")
    s.add_argument("--n", type=int, default=13)
    s.add_argument("--bound", type=int, default=10 ** 4)

    s = add("build-xe", cmd_build_xe, "equations of X_E(13,k) for y^2 = x^3 + a x + b")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--a", type=_rational_type, required=True)
    s.add_argument("--b", type=_rational_type, required=True)
    s.add_argument("--out", help="write the model bundle to this file")

    s = add("jmap", cmd_jmap, "image of a point of X_E(13,k) under the j-map")
    s.add_argument("--k", type=int)
    s.add_argument("--a", type=_rational_type)
    s.add_argument("--b", type=_rational_type)
    s.add_argument("--model", help="model bundle written by build-xe")
    s.add_argument("--point", required=True, help="seven comma-separated coordinates")

    s = add("surface", cmd_surface, "membership on the double cover y^2 = F_k")
    s.add_argument("--k", type=int)
    s.add_argument("--point", help="x,y,z")
    s.add_argument("--selftest", action="store_true")

    s = add("family", cmd_family, "specialise a one-parameter family")
    s.add_argument("--kind", type=_kind, required=True)
    s.add_argument("--t", type=_rational_type, required=True)
    s.add_argument("--bound", type=int, default=10 ** 4)
    s.add_argument("--check-point", action="store_true", help="also build X_E(13,k) and test the family point")

    s = add("derive-g2", cmd_derive_g2, "recover g2 for a family")
    s.add_argument("--kind", type=_kind, required=True)

    s = add("invariant-dims", cmd_invariant_dims, "dimensions of spaces of (bi-)invariants")
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--kind", choices=("plain", "skew"), default="plain")

    s = add("appendix", cmd_appendix, "the surface Sigma and its worked example")
    s.add_argument("--selftest", action="store_true")
    s.add_argument("--point", help="T,X,Y to test for membership of Sigma")
    s.add_argument("--no-stretch", action="store_true", help="skip the non-torsion certificate")

    s = add("curve", cmd_curve, "resolve a curve label")
    s.add_argument("label")
    s.add_argument("--traces", type=int, help="include a_p for p up to this bound")

    s = add("selftest", cmd_selftest, "run the acceptance criteria")
    s.add_argument("--suite", choices=("paper", "fast"), default="fast")
    return p


def dispatch(argv: list[str] | None = None) -> CommandResult:
    args = build_parser().parse_args(argv)
    try:
        result, code = args.func(args)
    except InputError as exc:
        result, code = {"error": str(exc)}, EXIT_USAGE
    return CommandResult(args.command, _params(args), result, code)


def main(argv: list[str] | None = None) -> int:
    try:
        res = dispatch(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    print(res.dumps())
    return res.exit_code


if __name__ == "__main__":
    sys.exit(main())
