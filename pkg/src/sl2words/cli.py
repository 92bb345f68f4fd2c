"""Command line front end: ``sl2words <subcommand> ...``.

Every subcommand prints one JSON document (or its flattened ``key = value``
text form). Negative mathematical answers exit 0 with a ``status`` field;
exit 2 means bad usage, exit 3 means an internal identity failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import brauer, conic, oracle, solver, surfaces
from .errors import (EmptyVariety, InvariantError, Insolvable, OnCayleyCubic, SearchExhausted,
                     SingularSurface, TrivialWordError, NotInCommutatorSubgroup, Unsupported,
                     WordSyntaxError, BoundExceeded, NotInSL2)
from .fields import QQ, element_to_json, parse_field
from .matrices import parse_matrix
from .trace import commutator_factor, trace_polynomial
from .polynomial import MARKOFF_F
from .words import parse_word

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 2, 3


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _triple(text: str, field):
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 3:
        raise UsageError(f"expected s,t,u but got {text!r}")
    return tuple(field(_rational(x)) for x in parts)


def _field(args):
    return parse_field(args.field)


def cmd_trace_poly(args):
    return {"poly": str(trace_polynomial(parse_word(args.word)))}


def cmd_factor(args):
    w = parse_word(args.word)
    try:
        q = commutator_factor(w)
    except (TrivialWordError, NotInCommutatorSubgroup) as exc:
        return {"status": "refused", "word": str(w), "reason": str(exc)}
    return {"status": "ok", "word": str(w), "poly": str(trace_polynomial(w)),
            "quotient": str(q), "divisor": str(MARKOFF_F)}


def cmd_solve(args):
    field = _field(args)
    w = parse_word(args.word)
    alpha = parse_matrix(args.alpha, field)
    try:
        sol = solver.solve_word_equation(w, alpha, bound=args.bound)
    except EmptyVariety as exc:
        return {"status": "empty", "message": str(exc), "certificate": exc.certificate}
    except Insolvable as exc:
        return {"status": "insolvable", "message": str(exc), "certificate": exc.certificate}
    except SearchExhausted as exc:
        return {"status": "search_exhausted", "message": str(exc), "bounds": exc.bounds}
    except Unsupported as exc:
        return {"status": "unsupported", "reason": exc.reason}
    return {"status": "solved", **sol.to_dict()}


def cmd_markoff(args):
    field = _field(args)
    d = field(_rational(args.d))
    info = surfaces.markoff_info(d, field)
    if not info.smooth:
        return {"smooth": False,
                "singular_points": [[element_to_json(x) for x in pt] for pt in info.singular_points]}
    if field != QQ:
        count = surfaces.enumerate_points_fp(surfaces.markoff(d, field), field.p, jobs=args.jobs)
        return {"smooth": True, "points": count.count}
    record = brauer.markoff_brauer(d)
    return {"smooth": True, "rational": record.rational,
            "brauer_quotient": record.quotient.value, "class": record.cls}


def _surface_from_args(args, field):
    if args.d is not None:
        return surfaces.markoff(field(_rational(args.d)), field)
    if args.word is None or args.a is None:
        raise UsageError("points needs --d, or --word with --a")
    return surfaces.trace_surface(parse_word(args.word), field(_rational(args.a)), field)


def cmd_points(args):
    field = _field(args)
    spec = _surface_from_args(args, field)
    out = {"surface": str(spec), "field": field.name}
    if field != QQ:
        res = surfaces.enumerate_points_fp(spec, field.p, emit_list=args.emit_list, jobs=args.jobs)
        out["count"] = res.count
        if res.points is not None:
            out["points"] = [pt.to_json() for pt in res.points]
    else:
        found = []
        try:
            found = list(surfaces.search_points_q(spec, args.bound, args.strategy, limit=args.limit))
        except SearchExhausted as exc:
            out["status"] = "search_exhausted"
            out["bounds"] = exc.bounds
        else:
            out["status"] = "ok"
        out["count"] = len(found)
        out["points"] = [pt.to_json() for pt in found]
    if args.csv and out.get("points") is not None:
        rows = out["points"]
        with open(args.csv, "w", newline="") as fh:
            oracle.write_rows_csv(rows, fh)
    return out


def cmd_conic(args):
    field = _field(args)
    pt = _triple(args.point, field)
    fiber = conic.fiber_at(pt)
    out = {"point": [element_to_json(x) for x in pt], "c": element_to_json(fiber.c),
           "f": element_to_json(fiber.f), "special": fiber.special}
    if field == QQ:
        verdict = conic.conic_solvable_q(fiber)
        out["solvable"] = verdict.solvable
        out["failing_places"] = [str(v) for v in verdict.failing]
    try:
        point = conic.conic_find_point(fiber, args.bound)
    except Insolvable:
        out["status"] = "insolvable"
        return out
    except SearchExhausted as exc:
        out["status"] = "search_exhausted"
        out["bounds"] = exc.bounds
        return out
    M, g = conic.fiber_point_to_matrices(fiber, point)
    out.update(status="ok", conic_point=point.to_json(), M=M.to_json(), g_t=g.to_json())
    return out


def _place(text):
    if text in ("inf", "oo", "infinity"):
        return brauer.INF
    return int(text)


def cmd_hilbert(args):
    a, b = _rational(args.a), _rational(args.b)
    if a == 0 or b == 0:
        raise UsageError("Hilbert symbols need nonzero arguments")
    places = [_place(args.place)] if args.place else brauer.places_for(a, b)
    return {"a": element_to_json(a), "b": element_to_json(b),
            "symbols": {str(v): brauer.hilbert_symbol(a, b, v) for v in places}}


def cmd_invariants(args):
    if args.point is not None:
        if args.d is None:
            raise UsageError("--point needs --d")
        d = _rational(args.d)
        inv = brauer.evaluate_class_at_point(d, _triple(args.point, QQ))
        head = {"d": element_to_json(d), "point": [element_to_json(x) for x in _triple(args.point, QQ)]}
    else:
        if args.a is None or args.b is None:
            raise UsageError("invariants needs A B, or --d with --point")
        cls = brauer.QuaternionClass.of(_rational(args.a), _rational(args.b))
        inv = brauer.quaternion_invariants(cls)
        head = {"class": [cls.a, cls.b]}
    return {**head, "invariants": inv.to_json(), "ramified": [str(v) for v in inv.ramified],
            "product": inv.product}


def cmd_count(args):
    field = _field(args)
    if field == QQ:
        raise UsageError("count runs over Fp:<p>")
    w = parse_word(args.word)
    alpha = parse_matrix(args.alpha, field)
    if alpha.det() != 1:
        raise NotInSL2(f"det {alpha} != 1")
    res = oracle.brute_force_count(w, alpha, field.p, emit_list=args.emit_list, jobs=args.jobs)
    out = {"word": str(w), "alpha": alpha.to_json(), "p": field.p, "count": res.count}
    if res.pairs is not None:
        out["pairs"] = [[A.to_json(), B.to_json()] for A, B in res.pairs]
    return out


def cmd_verify(args):
    p = args.p
    if args.suite == "equivalences":
        out = oracle.verify_equivalences(p, jobs=args.jobs)
        out["ok"] = out["violations"] == 0
        return out
    if args.suite == "fiber-counts":
        rows = oracle.fiber_count_rows(p, corrected=args.corrected, jobs=args.jobs)
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                oracle.write_rows_csv(rows, fh)
        return {"p": p, "corrected": args.corrected, "rows": rows,
                "ok": all(r["ok"] for r in rows)}
    if args.suite == "flatness":
        groups = oracle.flatness_check(p, jobs=args.jobs)
        return {"p": p, "counts_by_trace": {str(k): v for k, v in groups.items()},
                "ok": all(len(v) == 1 for v in groups.values())}
    return oracle.commuting_pairs_check(p, jobs=args.jobs)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q or Fp:<p>")
    common.add_argument("--bound", type=int, default=surfaces.DEFAULT_BOUND,
                        help="height bound for searches over Q")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--emit-list", action="store_true")

    parser = argparse.ArgumentParser(prog="sl2words", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace-poly", parents=[common], help="trace polynomial P_w")
    p.add_argument("word")
    p.set_defaults(func=cmd_trace_poly)

    p = sub.add_parser("factor", parents=[common], help="Q_w with P_w - 2 = F * Q_w")
    p.add_argument("word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("solve", parents=[common], help="solve w(X, Y) = alpha")
    p.add_argument("--word", required=True)
    p.add_argument("--alpha", required=True, help="[[a,b],[c,d]]")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("markoff", parents=[common], help="smoothness and Brauer data of M_d")
    p.add_argument("--d", required=True)
    p.set_defaults(func=cmd_markoff)

    p = sub.add_parser("points", parents=[common], help="points of M_d or P_w = a")
    p.add_argument("--d")
    p.add_argument("--word")
    p.add_argument("--a")
    p.add_argument("--limit", type=int, default=10)
    p.add_argument("--strategy", choices=("split", "grid"), default="split")
    p.add_argument("--csv", help="also write the points to this CSV file")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("conic", parents=[common], help="fibre conic over s,t,u")
    p.add_argument("--point", required=True, help="s,t,u")
    p.set_defaults(func=cmd_conic)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert symbol (a, b)_v")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--place", help="inf or a prime; default all relevant places")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("invariants", parents=[common], help="local invariants of a quaternion class")
    p.add_argument("a", nargs="?")
    p.add_argument("b", nargs="?")
    p.add_argument("--d", help="evaluate (t^2-4, d) at --point on M_d")
    p.add_argument("--point")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("count", parents=[common], help="exhaustive count over SL(2, F_p)^2")
    p.add_argument("--word", required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="exhaustive identity checks")
    p.add_argument("suite", choices=("equivalences", "fiber-counts", "flatness", "commuting"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--corrected", action="store_true",
                   help="fiber-counts: use p - chi(a^2 - 4) instead of p - 1")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_verify)
    return parser


def flatten(doc, prefix="") -> list:
    """``key = value`` lines; nested keys joined by dots, list items by index."""
    if isinstance(doc, dict):
        items = doc.items()
    elif isinstance(doc, list):
        items = enumerate(doc)
    else:
        return [f"{prefix} = {json.dumps(doc)}"]
    lines = []
    for k, v in items:
        key = f"{prefix}.{k}" if prefix else str(k)
        if isinstance(v, (dict, list)) and v:
            lines += flatten(v, key)
        else:
            lines.append(f"{key} = {json.dumps(v)}")
    return lines


def render(doc, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(flatten(doc))
    return json.dumps(doc)


_USAGE_ERRORS = (UsageError, WordSyntaxError, ValueError, OnCayleyCubic, SingularSurface,
                 BoundExceeded, NotInSL2)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc = args.func(args)
    except InvariantError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except _USAGE_ERRORS as exc:
        print(f"{args.command}: {exc}", file=err)
        return EXIT_USAGE
    print(render(doc, args.format), file=out)
    return EXIT_OK


def main():
    sys.exit(run())
