import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from desargues.skewfield import FieldSpec  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = []


def scalars(spec: FieldSpec, nonzero: bool = False):
    """Hypothesis strategy for scalars of ``spec``, built from integers only."""
    if spec.kind == "Q":
        base = st.builds(lambda n, d: spec.parse_scalar(f"{n}/{d}"),
                         st.integers(-50, 50), st.integers(1, 12))
    elif spec.kind == "HQ":
        comp = st.builds(lambda n, d: f"{n}/{d}", st.integers(-9, 9), st.integers(1, 5))
        base = st.builds(lambda a, b, c, d: spec.parse_scalar(f"{a}+{b}i+{c}j+{d}k".replace("+-", "-")),
                         comp, comp, comp, comp)
    elif spec.k == 1:
        base = st.builds(lambda r: spec.parse_scalar(str(r)), st.integers(0, spec.p - 1))
    else:
        base = st.builds(lambda cs: spec.parse_scalar("[" + ",".join(map(str, cs)) + "]"),
                         st.lists(st.integers(0, spec.p - 1), min_size=spec.k, max_size=spec.k))
    return base.filter(lambda x: not x.is_zero()) if nonzero else base


@pytest.fixture
def record_criterion():
    def record(n, ok, detail):
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
