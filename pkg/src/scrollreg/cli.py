"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 certification failure,
3 degenerate geometry.
"""
import argparse
import json
import sys

from .errors import (BudgetExceeded, CertificationError, DegenerateInputError,
                     LineContainedError, ScrollRegError)
from .groebner import Ideal, irrelevant_ideal, saturate
from .poly import GREVLEX, PolyRing, parse_order
from .resolution import betti_table, check_resolution, minimal_resolution, regularity

EXIT_OK, EXIT_INPUT, EXIT_CERT, EXIT_DEGENERATE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(data):
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno} "
                         f"(position {exc.pos}): {exc.msg}") from None


def load_ideal(path):
    """Read ``{"variables": [...], "generators": [...]}``; a construct report also works."""
    data = _load_json(path)
    if isinstance(data, dict) and "X" in data and "variables" not in data:
        data = data["X"]
    if not isinstance(data, dict) or "variables" not in data or "generators" not in data:
        raise InputError(f'{path}: expected an object with "variables" and "generators"')
    names, gens = data["variables"], data["generators"]
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise InputError(f"{path}: variables must be a list of names")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise InputError(f"{path}: generators must be a list of strings")
    try:
        ring = PolyRing(names)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None
    return Ideal(ring, [ring.parse(g) for g in gens])


def _order(args):
    try:
        return parse_order(args.order) if args.order else GREVLEX
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _saturated(ideal, args):
    sat = saturate(ideal, irrelevant_ideal(ideal.ring), budget_seconds=args.budget_seconds)
    changed = not (sat is ideal or sat == ideal)
    return sat, changed


def _betti(ideal, args):
    res = minimal_resolution(ideal, budget_seconds=args.budget_seconds, order=_order(args))
    return res, betti_table(res)


def _notes(changed):
    return ["input was not saturated; the saturation was used"] if changed else []


def cmd_betti(args):
    ideal = load_ideal(args.ideal)
    sat, changed = _saturated(ideal, args)
    res, B = _betti(sat, args)
    payload = dict(B.to_json())
    payload["regularity"] = regularity(B)
    payload["empty"] = B.empty
    payload["notes"] = _notes(changed)
    if args.degree_cap is not None:
        rep = check_resolution(res, degree_cap=args.degree_cap, ideal=sat)
        payload["check"] = rep.to_json()
        if not rep.ok:
            _emit(args, _dump(payload) if args.format == "json" else
                  "\n".join(rep.failures) + "\n")
            return EXIT_CERT
    if args.format == "json":
        _emit(args, _dump(payload))
    else:
        lines = [B.to_text()] + [f"note: {n}" for n in payload["notes"]]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_regularity(args):
    ideal = load_ideal(args.ideal)
    sat, changed = _saturated(ideal, args)
    _, B = _betti(sat, args)
    reg = regularity(B)
    if args.format == "json":
        _emit(args, _dump({"regularity": reg, "empty": B.empty, "notes": _notes(changed)}))
    else:
        lines = [str(reg)]
        if B.empty:
            lines.append("note: zero ideal, regularity defined as 0")
        lines += [f"note: {n}" for n in _notes(changed)]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _line(ideal, args):
    from .scroll import Line
    names = [v.strip() for v in args.line.split(",") if v.strip()]
    for v in names:
        if v not in ideal.ring:
            raise InputError(f"unknown variable {v!r} in --line")
    try:
        return Line.coordinate(ideal.ring, names)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_secant(args):
    from .scroll import EmbeddedScheme, secant_divisor
    ideal = load_ideal(args.ideal)
    X = EmbeddedScheme(ideal, budget_seconds=args.budget_seconds)
    line = _line(ideal, args)
    g = secant_divisor(X, line)
    length = 0 if g.is_constant() else g.total_degree
    if args.format == "json":
        _emit(args, _dump({"secant_length": length, "divisor": str(g),
                           "line": line.to_json()}))
    else:
        _emit(args, f"{length}\n")
    return EXIT_OK


def cmd_project(args):
    from .scroll import EmbeddedScheme, project_from_line, secant_divisor
    ideal = load_ideal(args.ideal)
    X = EmbeddedScheme(ideal, budget_seconds=args.budget_seconds)
    line = _line(ideal, args)
    secant_divisor(X, line)  # raises when the centre lies on X
    Y = project_from_line(X, line, budget_seconds=args.budget_seconds)
    payload = {"variables": list(Y.ring.variables),
               "generators": [str(g) for g in Y.ideal.generators],
               "hilbert": Y.hilbert.to_json(), "dimension": Y.dimension, "degree": Y.degree,
               "dimension_drop": Y.flags["dimension_drop"],
               "minimal_degree": Y.flags["minimal_degree"]}
    if args.format == "json":
        _emit(args, _dump(payload))
    else:
        lines = [f"P^{Y.ambient_dimension}: dimension {Y.dimension}, degree {Y.degree}"]
        if Y.flags["dimension_drop"]:
            lines.append(f"warning: dimension dropped by {Y.flags['dimension_drop']}")
        lines += [str(g) for g in Y.ideal.generators]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_construct(args):
    from .scroll import ScrollSpec, construct
    data = _load_json(args.spec)
    if not isinstance(data, dict):
        raise InputError(f"{args.spec}: a spec must be a JSON object")
    if args.seed is not None:
        if "alpha" in data:
            raise InputError("--seed applies only to specs that draw alpha from a seed")
        data = dict(data, seed=args.seed)
    try:
        spec = ScrollSpec.from_json(data)
    except DegenerateInputError:
        raise
    except (ValueError, TypeError) as exc:
        raise InputError(f"{args.spec}: {exc}") from None
    try:
        report = construct(spec, budget_seconds=args.budget_seconds)
    except DegenerateInputError as exc:
        # alpha is outside the generic situation: no certificate possible
        raise CertificationError([str(exc)]) from None
    failures = report.failures()
    if args.format == "json":
        _emit(args, _dump(report.to_json()))
    else:
        s = spec
        lines = [
            f"n={s.n} a={list(s.a)} k1={s.k1} k2={s.k2}  d={s.d} r={s.r}",
            f"splitting type b = {report.b} (sum {sum(report.b)}; d+n-1 = {s.d + s.n - 1})",
            f"X: dimension {report.X.dimension}, degree {report.X.degree}, "
            f"{len(report.X.minimal_generators())} minimal generators",
            f"secant divisor {report.secant_divisor}, length {report.secant_length}",
            f"regularity {report.regularity}",
            report.betti.to_text(),
            f"projection: {report.projection_check}",
            f"smooth along the secant scheme: {report.smooth_at_secant}",
        ]
        lines += [f"FAIL {f}" for f in failures]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_CERT if failures else EXIT_OK


def cmd_verify(args):
    from .verify import run_suite
    seed = args.seed if args.seed is not None else 0
    summary = run_suite(args.suite, seed=seed, trials=args.trials,
                        budget_seconds=args.budget_seconds)
    if args.format == "json":
        _emit(args, _dump(summary))
    else:
        lines = [f"{'PASS' if r['passed'] else 'FAIL'} {r['name']}" for r in summary["results"]]
        for r in summary["results"]:
            lines += [f"  {f}" for f in r["failures"][:5]]
        lines.append("all passed" if summary["ok"] else "some checks failed")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if summary["ok"] else EXIT_CERT


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--order", default=None,
                        help="monomial order: grevlex, lex, block(a,b) or weighted(..)")
    common.add_argument("--degree-cap", type=int, default=None,
                        help="check exactness of the resolution up to this degree")
    common.add_argument("--budget-seconds", type=float, default=None,
                        help="wall-clock budget per Groebner computation")
    common.add_argument("--out", default=None, metavar="FILE")

    parser = argparse.ArgumentParser(
        prog="scrollreg",
        description="Rational scrolls with an extremal secant line, certified by exact algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="run the scroll construction")
    p.add_argument("spec", help="ScrollSpec JSON file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("betti", parents=[common], help="Betti table of a saturated ideal")
    p.add_argument("ideal", help="ideal JSON file")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("regularity", parents=[common], help="Castelnuovo-Mumford regularity")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_regularity)

    for name, func, text in (("secant", cmd_secant, "length of X cap l"),
                             ("project", cmd_project, "projection from a coordinate line")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("ideal")
        p.add_argument("--line", required=True, metavar="A,B",
                       help="the two coordinates kept on the line, e.g. u0,u1")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", nargs="?", choices=("quick", "full"), default="quick")
    p.add_argument("--trials", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.degree_cap is not None and args.degree_cap < 2:
        print("error: --degree-cap must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificationError as exc:
        print("certification failed: " + "; ".join(exc.failures), file=sys.stderr)
        return EXIT_CERT
    except LineContainedError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DegenerateInputError as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except BudgetExceeded as exc:
        print(f"certification failed: {exc}", file=sys.stderr)
        return EXIT_CERT
    except ScrollRegError as exc:
        # parse errors and other malformed input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
