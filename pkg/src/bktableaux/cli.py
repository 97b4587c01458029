"""Command-line front end.

Exit codes: 0 success, 1 invalid input or counterexample found, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import benderknuth as bk
from .bijections import pattern_to_tableau, sop_mark, sot_corestrict, sot_extend, tableau_to_pattern
from .checks import CHECKS, run_check
from .combinatorics import (
    SIGNED, SIGNED_INF, TYPE_A, OrthogonalPattern, Tableau, shape_of_orthogonal,
    validate_gt, validate_king, validate_orthogonal,
)
from .enumeration import enum_gt, enum_king, enum_orthogonal, orthogonal, schur, symplectic
from .errors import ValidityError
from .formats import (
    dumps, is_tableau_json, pattern_from_json, pattern_to_json, render_pattern, render_tableau,
    tableau_from_json, tableau_to_json,
)
from .laurent import format_poly


class UsageError(Exception):
    pass


def parse_shape(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}; use comma-separated parts")
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition")
    return parts


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(dumps(obj["json"]))
    else:
        sys.stdout.write(obj["text"] + "\n")


def _render(x, kind: str | None = None) -> dict:
    if isinstance(x, Tableau):
        return {"json": tableau_to_json(x), "text": render_tableau(x)}
    return {"json": pattern_to_json(x, kind), "text": render_pattern(x)}


# ---------------------------------------------------------------- subcommands

def cmd_enumerate(args) -> int:
    n, lam = args.n, args.shape
    if sum(1 for p in lam if p) > n:
        raise UsageError(f"shape {lam} has more than {n} parts")
    stream = {"ssyt": enum_gt, "king": enum_king, "orthogonal": enum_orthogonal}[args.type](n, lam)
    if args.format == "count":
        print(sum(1 for _ in stream))
        return 0
    for P in stream:
        if args.objects == "tableau":
            if args.type == "ssyt":
                item = _render(pattern_to_tableau(P, TYPE_A))
            elif args.type == "king":
                item = _render(pattern_to_tableau(P, SIGNED))
            else:
                item = _render(sot_extend(pattern_to_tableau(P.pattern, SIGNED), shape_of_orthogonal(P)))
        else:
            item = _render(P, "gt" if args.type == "ssyt" else "king")
        if args.format == "json":
            sys.stdout.write(dumps(item["json"]))
        else:
            print(item["text"] + "\n")
    return 0


def cmd_poly(args) -> int:
    if sum(1 for p in args.shape if p) > args.n:
        raise UsageError(f"shape {args.shape} has more than {args.n} parts")
    fn = {"schur": schur, "symplectic": symplectic, "orthogonal": orthogonal}[args.family]
    f = fn(args.n, args.shape)
    if args.format == "json":
        sys.stdout.write(dumps(f.to_json()))
    else:
        print(format_poly(f))
    return 0


def _load_object(data):
    if is_tableau_json(data):
        return None, tableau_from_json(data)
    return pattern_from_json(data)


def _bk_range(kind: str, obj) -> range:
    if kind == "a":
        size = obj.alphabet_size if isinstance(obj, Tableau) else obj.N
        return range(1, size)
    n = obj.n if isinstance(obj, (Tableau, OrthogonalPattern)) else obj.N // 2
    return range(0, n)


def cmd_bk(args) -> int:
    pkind, obj = _load_object(_read_json(args.input))
    kind, j = args.kind, args.j
    if kind == "a":
        if isinstance(obj, OrthogonalPattern) or (isinstance(obj, Tableau) and obj.kind == SIGNED_INF):
            raise ValidityError("type A involutions act on SSYT, King tableaux or GT patterns")
        if not isinstance(obj, Tableau) and not validate_gt(obj):
            raise ValidityError("not a valid Gelfand-Tsetlin pattern")
    elif kind == "c":
        if isinstance(obj, Tableau):
            if obj.kind != SIGNED:
                raise ValidityError("type C involutions act on King tableaux")
        elif isinstance(obj, OrthogonalPattern) or not validate_king(obj):
            raise ValidityError("type C involutions act on King patterns")
    else:
        if isinstance(obj, Tableau):
            if obj.kind != SIGNED_INF:
                raise ValidityError("type B involutions act on orthogonal tableaux")
        elif not isinstance(obj, OrthogonalPattern) or not validate_orthogonal(obj):
            raise ValidityError("type B involutions act on orthogonal patterns")
    if j not in _bk_range(kind, obj):
        raise UsageError(f"--j {j} out of range for this input")

    if args.trace:
        if kind != "c" or j == 0:
            raise UsageError("--trace is available for type C with j >= 1")
        if isinstance(obj, Tableau):
            steps = bk.bk_c_tableau_trace(obj, j)[1:]
        else:
            steps = bk.bk_c_trace(obj, j)[1:]
        items = [_render(s, "gt" if i < 4 else pkind) for i, s in enumerate(steps)]
        if args.format == "json":
            sys.stdout.write(dumps([it["json"] for it in items]))
        else:
            print("\n\n".join(it["text"] for it in items))
        return 0

    if kind == "a":
        out = bk.bk_a_tableau(obj, j) if isinstance(obj, Tableau) else bk.bk_a_pattern(obj, j)
        if pkind == "king" and not validate_king(out):
            pkind = "gt"
    elif kind == "c":
        out = bk.bk_c_tableau(obj, j) if isinstance(obj, Tableau) else bk.bk_c_pattern(obj, j)
    else:
        out = bk.bk_b_tableau(obj, j) if isinstance(obj, Tableau) else bk.bk_b(obj, j)
    _emit(_render(out, pkind), args.format)
    return 0


def cmd_convert(args) -> int:
    pkind, obj = _load_object(_read_json(args.input))
    if isinstance(obj, Tableau):
        if obj.kind == SIGNED_INF:
            king, _ = sot_corestrict(obj)
            out, okind = sop_mark(tableau_to_pattern(king), obj.shape), "orthogonal"
        else:
            out, okind = tableau_to_pattern(obj), ("gt" if obj.kind == TYPE_A else "king")
    elif isinstance(obj, OrthogonalPattern):
        if not validate_orthogonal(obj):
            raise ValidityError("not a valid orthogonal pattern")
        out, okind = sot_extend(pattern_to_tableau(obj.pattern, SIGNED), shape_of_orthogonal(obj)), None
    elif pkind == "king":
        if not validate_king(obj):
            raise ValidityError("not a valid King pattern")
        out, okind = pattern_to_tableau(obj, SIGNED), None
    else:
        out, okind = pattern_to_tableau(obj, TYPE_A), None
    _emit(_render(out, okind), args.format)
    return 0


def cmd_verify(args) -> int:
    report = run_check(args.check, args.n, args.max_size, seed=args.seed, samples=args.samples)
    sys.stdout.write(dumps(report.to_json()))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bktableaux",
                                     description="Tableaux, patterns and Bender-Knuth involutions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list or count tableaux/patterns of a shape")
    p.add_argument("--type", choices=("ssyt", "king", "orthogonal"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("--format", choices=("count", "json", "text"), default="count")
    p.add_argument("--objects", choices=("pattern", "tableau"), default="pattern")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("poly", help="Schur, symplectic or orthogonal polynomial")
    p.add_argument("--family", choices=("schur", "symplectic", "orthogonal"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", type=parse_shape, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("bk", help="apply a Bender-Knuth involution to a JSON tableau or pattern")
    p.add_argument("--kind", choices=("a", "b", "c"), required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="type C only: emit P1..P4 and the result")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("input", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_bk)

    p = sub.add_parser("convert", help="tableau JSON <-> pattern JSON")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("input", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run a bounded exhaustive check")
    p.add_argument("--check", choices=CHECKS, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--max-size", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValidityError, ValueError, KeyError, TypeError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
