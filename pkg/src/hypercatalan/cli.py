"""Command-line interface: ``hypercat <command> ...``.

Exit codes: 0 success, 1 verification failure or recurrence budget exhausted, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .closedform import fuss_catalan_power, hyper_catalan
from .errors import DomainError, NonTermination
from .geode import build_g, build_h, build_u, geode_coefficient
from .numroot import evaluate_truncated_s, residual_norm
from .oracle import enumerate_subdigons
from .recurrence import (
    ConstantIndex,
    GeodeRecurrence,
    LargestComponent,
    evaluate_combination,
    format_combination,
    hyper_catalan_recurrence,
)
from .sequences import Family, SliceTemplate, closed_form_geode, geode_slice, projected_sequence, to_bfile, to_json
from .series import Truncation, build_s, layer
from .typevec import TypeVec
from .verify import SUITES, Bounds, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _type(text: str) -> TypeVec:
    try:
        return TypeVec.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_hc(args) -> int:
    m = args.type
    if args.via == "closed":
        value = hyper_catalan(m)
    elif args.via == "recurrence":
        value = hyper_catalan_recurrence(m)
    else:
        value = enumerate_subdigons(m.faces, max(m.max_gon, 2)).get(m, 0)
    _emit(args, str(value), {"type": m.dense(), "value": str(value), "via": args.via})
    return EXIT_OK


def cmd_fuss(args) -> int:
    value = fuss_catalan_power(args.type, args.r)
    _emit(args, str(value), {"type": args.type.dense(), "r": args.r, "value": str(value)})
    return EXIT_OK


def _strategy(text: str):
    if text == "max":
        return LargestComponent()
    try:
        return ConstantIndex(int(text))
    except (ValueError, DomainError):
        raise UsageError(f"--x must be 'max' or an index >= 2, got {text!r}") from None


def cmd_geode_value(args) -> int:
    m = args.type
    if args.via == "division":
        value = geode_coefficient(m)
    elif args.via == "recurrence":
        value = GeodeRecurrence(_strategy(args.x)).value(m)
    else:
        try:
            value = closed_form_geode(m)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
    _emit(args, str(value), {"type": m.dense(), "value": str(value), "via": args.via})
    return EXIT_OK


def cmd_geode_expand(args) -> int:
    combo = GeodeRecurrence(_strategy(args.x), budget=args.budget).expand(args.type)
    value = evaluate_combination(combo)
    text = f"{format_combination(combo)} = {value}"
    terms = sorted(combo.items(), key=lambda tc: (tc[0].faces, tc[0].lex_key))
    payload = {
        "type": args.type.dense(),
        "terms": [{"type": t.dense(), "coeff": str(c)} for t, c in terms],
        "value": str(value),
    }
    _emit(args, text, payload)
    return EXIT_OK


_BUILDERS = {"S": build_s, "G": build_g, "U": build_u, "H": build_h}


def cmd_series_build(args) -> int:
    trunc = Truncation(args.faces, args.gons)
    if args.which in "GH" and args.faces < 1:
        raise UsageError(f"{args.which} needs --faces >= 1")
    p = _BUILDERS[args.which](trunc)
    if args.layer is None:
        print(p.to_json())
        return EXIT_OK
    grade = (lambda m: m.faces) if args.layer == "face" else (lambda m: m.weight)
    layers = layer(p, grade)
    print(json.dumps({str(g): q.to_records() for g, q in layers.items()}))
    return EXIT_OK


def cmd_seq(args) -> int:
    name = args.name
    families = {f.value: f for f in Family}
    if name in families:
        values = projected_sequence(families[name], args.target, args.count)
        offset = 0
    else:
        try:
            template = SliceTemplate(name)
        except DomainError:
            raise UsageError(f"unknown sequence {name!r}") from None
        values = geode_slice(template, args.count, start=args.start, via=args.via)
        offset = args.start
    if args.format == "json":
        print(to_json(values))
    else:
        sys.stdout.write(to_bfile(values, offset=offset))
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = Bounds(faces=args.faces, gons=args.gons, n_max=args.n_max, t_max=args.t_max)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for name in names:
        cases = run_suite(name, bounds)
        bad = [c for c in cases if not c.ok]
        failed += len(bad)
        if args.format == "json":
            print(json.dumps({
                "suite": name,
                "cases": len(cases),
                "failures": [{"case": c.name, "expected": str(c.expected), "got": str(c.got)} for c in bad],
            }))
            continue
        status = "PASS" if not bad else "FAIL"
        print(f"{status} {name}: {len(cases) - len(bad)}/{len(cases)}")
        if bad:
            width = max(len(c.name) for c in bad)
            print(f"  {'case':<{width}}  expected  got")
            for c in bad:
                print(f"  {c.name:<{width}}  {c.expected}  {c.got}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_solve(args) -> int:
    try:
        coeffs = [float(x) for x in args.coeffs.split(",")]
    except ValueError:
        raise UsageError(f"bad --coeffs {args.coeffs!r}") from None
    ev = evaluate_truncated_s(coeffs, args.levels)
    res = residual_norm(coeffs, ev.value)
    if args.format == "json":
        print(json.dumps({
            "value": repr(ev.value),
            "residual": repr(res),
            "increments": [repr(x) for x in ev.increments],
            "diverging": ev.diverging,
        }))
        return EXIT_OK
    print(f"value {ev.value!r}")
    print(f"residual {res!r}")
    if ev.diverging:
        print("divergence suspected")
    for d, inc in enumerate(ev.increments):
        print(f"level {d} {inc!r}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="hypercat", description="Hyper-Catalan and Geode computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hc", parents=[common], help="hyper-Catalan number")
    p.add_argument("type", type=_type)
    p.add_argument("--via", choices=["closed", "recurrence", "enumeration"], default="closed")
    p.set_defaults(func=cmd_hc)

    p = sub.add_parser("fuss", parents=[common], help="[t^m] S^r")
    p.add_argument("type", type=_type)
    p.add_argument("-r", type=int, default=1)
    p.set_defaults(func=cmd_fuss)

    geode = sub.add_parser("geode", help="Geode values and expansions")
    gsub = geode.add_subparsers(dest="geode_command", required=True)
    p = gsub.add_parser("value", parents=[common])
    p.add_argument("type", type=_type)
    p.add_argument("--via", choices=["division", "recurrence", "closed"], default="division")
    p.add_argument("--x", default="max", help="index strategy for --via recurrence: an index or 'max'")
    p.set_defaults(func=cmd_geode_value)
    p = gsub.add_parser("expand", parents=[common])
    p.add_argument("type", type=_type)
    p.add_argument("--x", default="max", help="an index >= 2 or 'max'")
    p.add_argument("--budget", type=int, default=10**6)
    p.set_defaults(func=cmd_geode_expand)

    series = sub.add_parser("series", help="truncated series as JSON")
    ssub = series.add_subparsers(dest="series_command", required=True)
    p = ssub.add_parser("build")
    p.add_argument("--faces", type=int, required=True)
    p.add_argument("--gons", type=int, required=True)
    p.add_argument("--which", choices=list(_BUILDERS), default="S")
    p.add_argument("--layer", choices=["face", "vertex"])
    p.set_defaults(func=cmd_series_build)

    p = sub.add_parser("seq", help="Geode slice (e.g. 'n,1') or projection family")
    p.add_argument("name", help="slice template with one 'n', or " + "|".join(f.value for f in Family))
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--target", choices=["S", "G"], default="G")
    p.add_argument("--via", choices=["division", "recurrence", "closed"], default="division")
    p.add_argument("--format", choices=["bfile", "json"], default="bfile")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--faces", type=int, default=5)
    p.add_argument("--gons", type=int, default=5)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--t-max", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="partial sum of S at numeric coefficients")
    p.add_argument("--coeffs", required=True, help="c2,c3,...")
    p.add_argument("--levels", type=int, default=30)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"hypercat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonTermination as exc:
        print(f"hypercat: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
