"""Command-line front end.

Exit status is 0 on success, 1 for a mathematical error or a failed check
(an error object is printed as JSON), and 2 for malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional

from . import suites
from .construct import OPERATIONS
from .dyckgroup import DyckPolygon, present, reach, validate_polygon
from .errors import GeometryError, LiteralError
from .plane import Point
from .ratio import line_equation_coeffs, midpoint_solve, ratio2, ratio3
from .skewfield import FieldSpec
from .svg import render_trace


class UsageError(Exception):
    pass


_NEGATIVE_LITERAL = re.compile(r"-[\d\[ijk]")


def _protect_negatives(argv: list) -> list:
    # argparse reads "-3/4" or "-k" as an option; a leading space hides it and
    # the literal parser drops spaces anyway
    return [" " + a if _NEGATIVE_LITERAL.match(a) else a for a in argv]


def _split_pair(text: str) -> tuple:
    """Split "x,y" at the top-level comma (extension literals contain commas)."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            return text[:i], text[i + 1:]
    raise LiteralError(f"aux point must look like x,y: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="desargues", description="Exact ruler-and-parallel arithmetic on a line.")
    p.add_argument("--field", default="Q", help="Q, F:p, F:p^k or HQ (default Q)")
    p.add_argument("--aux", help="auxiliary point off the line, as x,y")
    p.add_argument("--trace", choices=["json", "svg", "none"], default="json")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--out", help="write trace or report here instead of stdout")
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, args in (("add", "A B"), ("mul", "A B"), ("sub", "C A"), ("ldiv", "A B")):
        sp = sub.add_parser(name)
        for a in args.split():
            sp.add_argument(a)
    sp = sub.add_parser("ratio2")
    sp.add_argument("A")
    sp.add_argument("B")
    sp = sub.add_parser("ratio3")
    for a in "ABC":
        sp.add_argument(a)
    sp = sub.add_parser("lineq")
    sp.add_argument("B")
    sp.add_argument("C")
    sp = sub.add_parser("midpoint")
    sp.add_argument("A")
    sp.add_argument("B")
    sp = sub.add_parser("check")
    sp.add_argument("suite", choices=list(suites.SUITES))
    sp = sub.add_parser("dyck")
    dsub = sp.add_subparsers(dest="dyck_cmd", required=True)
    d = dsub.add_parser("validate")
    d.add_argument("file")
    d = dsub.add_parser("present")
    d.add_argument("file")
    d.add_argument("vertex")
    d = dsub.add_parser("reach")
    d.add_argument("file")
    d.add_argument("source")
    d.add_argument("target")
    return p


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _construct(args, spec) -> int:
    lit = spec.parse_scalar
    a, b = (lit(getattr(args, n)) for n in ("C", "A")) if args.cmd == "sub" else (lit(args.A), lit(args.B))
    aux = None
    if args.aux:
        x, y = _split_pair(args.aux)
        aux = Point(lit(x), lit(y))
    result, trace = OPERATIONS[args.cmd](a, b, aux)
    mode = args.trace
    if mode == "svg" and spec.kind != "Q":
        print(f"warning: SVG needs the rational backend; writing JSON for {spec}", file=sys.stderr)
        mode = "json"
    if mode == "none":
        print(result)
    elif mode == "json":
        doc = _dump({"result": str(result), "trace": trace.to_dict()})
        if args.out:
            _emit(doc, args.out)
            print(result)
        else:
            _emit(doc, None)
    else:
        _emit(render_trace(trace), args.out)
        if args.out:
            print(result)
    return 0


def _check(args, spec) -> int:
    cfg = suites.SuiteConfig(spec, seed=args.seed, samples=args.samples)
    checks = suites.SUITES[args.suite](cfg)
    _emit(_dump([c.to_dict() for c in checks]), args.out)
    counts = suites.summarize(checks)
    print(f"{args.suite} over {spec}: {counts['pass']} pass, {counts['fail']} fail, "
          f"{counts['skipped']} skipped", file=sys.stderr)
    return 1 if counts["fail"] else 0


def _load_polygon(path: str, spec: FieldSpec) -> DyckPolygon:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read polygon file {path}: {exc}") from exc
    if "field" not in data:
        data["field"] = str(spec)
    try:
        return DyckPolygon.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed polygon file {path}: {exc}") from exc


def _dyck(args, spec) -> int:
    P = _load_polygon(args.file, spec)
    if args.dyck_cmd == "validate":
        report = validate_polygon(P)
        _emit(_dump(report), args.out)
        return 0 if report["valid"] else 1
    if args.dyck_cmd == "present":
        w = present(P, args.vertex)
        _emit(_dump({"vertex": args.vertex, "word": w.coefficients, "measure": w.measure}), args.out)
        return 0
    path = reach(P, args.source, args.target)
    _emit(_dump({"path": path, "length": len(path) - 1}), args.out)
    return 0


def run(args) -> int:
    spec = FieldSpec.parse(args.field)
    lit = spec.parse_scalar
    if args.cmd in OPERATIONS:
        return _construct(args, spec)
    if args.cmd == "ratio2":
        print(ratio2(lit(args.A), lit(args.B)))
    elif args.cmd == "ratio3":
        print(ratio3(lit(args.A), lit(args.B), lit(args.C)))
    elif args.cmd == "lineq":
        eq = line_equation_coeffs(lit(args.B), lit(args.C))
        print(json.dumps({"M": str(eq.M), "N": str(eq.N)}))
    elif args.cmd == "midpoint":
        C = midpoint_solve(lit(args.A), lit(args.B))
        print("none" if C is None else C)
    elif args.cmd == "check":
        return _check(args, spec)
    elif args.cmd == "dyck":
        return _dyck(args, spec)
    return 0


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.samples < 1 or args.seed < 0:
        print("error: --samples must be positive and --seed nonnegative", file=sys.stderr)
        return 2
    try:
        return run(args)
    except (LiteralError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
