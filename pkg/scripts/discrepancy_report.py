"""Tabulate, per backend, how often each competing form of the disputed identities holds."""

import argparse
import collections

from desargues.ratio import TwoPointMap, check_substructure
from desargues.suites import SuiteConfig, ratio2_suite, ratio3_suite
from desargues.skewfield import FieldSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", nargs="*", default=["Q", "F:3", "F:5", "F:2^2", "HQ"])
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()
    for name in args.fields:
        spec = FieldSpec.parse(name)
        cfg = SuiteConfig(spec, seed=args.seed, samples=args.samples)
        checks = ratio2_suite(cfg) + ratio3_suite(cfg)
        line = spec.elements() if spec.is_finite else [spec.from_int(n) for n in range(1, 4)]
        checks += check_substructure(TwoPointMap(spec.one()), list(line)[:3])
        holds = collections.defaultdict(collections.Counter)
        for c in checks:
            if c.forms:
                for form, ok in c.forms.items():
                    holds[c.identity][form] += ok
                holds[c.identity]["cases"] += 1
        iff = [c for c in checks if c.identity == "r(A:B) = r(B:A) <=> A = B"]
        print(f"== {name}")
        for ident, cnt in holds.items():
            forms = ", ".join(f"{k} {v}/{cnt['cases']}" for k, v in cnt.items() if k != "cases")
            print(f"  {ident}\n      {forms}")
        bad = [c for c in iff if c.status == "fail"]
        print(f"  iff as printed fails on {len(bad)}/{len(iff)} triples"
              + (f", e.g. A={bad[0].inputs['A']}, B={bad[0].inputs['B']}" if bad else ""))


if __name__ == "__main__":
    main()
