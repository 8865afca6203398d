"""Count valid Desargues configurations in small finite planes and check each one."""

import argparse
import time

from desargues.plane import check_desargues, enumerate_desargues_configs
from desargues.skewfield import FieldSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("fields", nargs="*", default=["F:2", "F:3"])
    args = ap.parse_args()
    for name in args.fields:
        spec = FieldSpec.parse(name)
        start = time.perf_counter()
        total = true = 0
        for cfg in enumerate_desargues_configs(spec):
            total += 1
            true += check_desargues(cfg)
        print(f"AG(2,{name}): {total} valid configurations, {true} with AC || A'C' "
              f"({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main()
