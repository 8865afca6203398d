"""Write JSON and SVG traces for a handful of rational constructions."""

import argparse
import json
from pathlib import Path

from desargues.construct import OPERATIONS
from desargues.skewfield import FieldSpec
from desargues.svg import render_trace

CASES = [("add", "3", "2"), ("mul", "3", "2"), ("sub", "5", "3"), ("ldiv", "6", "2"), ("mul", "-1/2", "3/4")]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="traces")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    Q = FieldSpec.rationals()
    for op, a, b in CASES:
        result, trace = OPERATIONS[op](Q.parse_scalar(a), Q.parse_scalar(b))
        stem = f"{op}_{a}_{b}".replace("/", "over").replace("-", "m")
        (out / f"{stem}.json").write_text(json.dumps(trace.to_dict(), indent=2) + "\n")
        (out / f"{stem}.svg").write_text(render_trace(trace))
        print(f"{op}({a}, {b}) = {result}  replay={'ok' if trace.replay() else 'FAILED'}  -> {stem}.svg")


if __name__ == "__main__":
    main()
