import json
import random

import pytest

from desargues.cli import main
from desargues.construct import ConstructionTrace
from desargues.dyckgroup import example_polygon
from desargues.skewfield import FieldSpec


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul_trace(capsys):
    code, out, _ = run(capsys, "--field", "Q", "mul", "3", "2")
    doc = json.loads(out)
    assert code == 0 and doc["result"] == "6"
    assert max(s["step"] for s in doc["trace"]["steps"]) == 3
    assert ConstructionTrace.from_dict(doc["trace"]).replay()


def test_simple_outputs(capsys):
    assert run(capsys, "--field", "HQ", "ratio2", "j", "i")[1].strip() == "-k"
    assert run(capsys, "--field", "F:2", "midpoint", "0", "1")[1].strip() == "none"
    assert run(capsys, "--field", "F:2", "midpoint", "1", "1")[1].strip() == "all"
    assert run(capsys, "--field", "Q", "midpoint", "2", "4")[1].strip() == "3"
    assert run(capsys, "ratio3", "7", "3", "1")[1].strip() == "3"
    assert run(capsys, "ratio2", "5", "0")[1].strip() == "inf"
    assert json.loads(run(capsys, "--field", "F:5", "lineq", "3", "1")[1]) == {"M": "3", "N": "2"}
    assert run(capsys, "--trace", "none", "sub", "5", "3")[1].strip() == "2"
    assert run(capsys, "--trace", "none", "ldiv", "6", "2")[1].strip() == "3"


def test_extension_aux(capsys):
    code, out, _ = run(capsys, "--field", "F:2^2", "--aux", "[1,1],[0,1]", "--trace", "none", "mul", "[0,1]", "[1,1]")
    assert (code, out.strip()) == (0, "[1,0]")


@pytest.mark.parametrize("argv,err", [
    (["ratio2", "0", "0"], "UndefinedRatio"),
    (["ldiv", "1", "0"], "DivisionByZero"),
    (["--aux", "1,0", "add", "1", "2"], "AuxOnLine"),
    (["ratio3", "1", "1", "1"], "UndefinedRatio"),
])
def test_math_errors_exit_1(capsys, argv, err):
    code, out, _ = run(capsys, *argv)
    assert code == 1 and json.loads(out)["error"] == err


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["--field", "F:4", "add", "1", "2"], ["add", "1/0", "2"], ["--aux", "3", "add", "1", "2"],
    ["--samples", "0", "check", "axioms"], ["check", "nothing"], ["--trace", "pdf", "add", "1", "1"],
    ["dyck", "validate", "/nonexistent.json"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_svg(capsys, tmp_path):
    out = tmp_path / "t.svg"
    code, stdout, _ = run(capsys, "--trace", "svg", "--out", str(out), "add", "3", "2")
    assert code == 0 and stdout.strip() == "5"
    text = out.read_text()
    assert text.startswith("<svg") and "P1" in text and "e" not in text.split('viewBox')[1].split('"')[1]


def test_svg_falls_back_to_json(capsys):
    code, out, err = run(capsys, "--field", "HQ", "--trace", "svg", "mul", "i", "j")
    assert code == 0 and json.loads(out)["result"] == "k" and "warning" in err


def test_trace_to_file(capsys, tmp_path):
    path = tmp_path / "trace.json"
    code, out, _ = run(capsys, "--out", str(path), "add", "1/2", "1/3")
    assert out.strip() == "5/6"
    assert ConstructionTrace.from_dict(json.loads(path.read_text())["trace"]).replay()


@pytest.mark.parametrize("field", ["Q", "F:5", "F:2^2", "HQ"])
def test_random_traces_replay(capsys, field):
    spec = FieldSpec.parse(field)
    rng = random.Random(field)
    for _ in range(25):
        a, b = str(spec.random(rng)), str(spec.random(rng))
        op = rng.choice(["add", "mul"])
        code, out, _ = run(capsys, "--field", field, op, a, b)
        assert code == 0
        doc = json.loads(out)
        trace = ConstructionTrace.from_dict(doc["trace"])
        assert trace.replay() and str(trace.result) == doc["result"]


@pytest.mark.parametrize("suite", ["axioms", "ratio2", "ratio3", "substructure", "preservation", "desargues"])
@pytest.mark.parametrize("field", ["Q", "F:5", "HQ"])
def test_check_exit_matches_report(capsys, suite, field):
    code, out, _ = run(capsys, "--field", field, "--samples", "40", "check", suite)
    report = json.loads(out)
    assert report and all(set(r) >= {"identity", "inputs", "status", "lhs", "rhs"} for r in report)
    assert code == (1 if any(r["status"] == "fail" for r in report) else 0)


def test_dyck_commands(capsys, tmp_path):
    path = tmp_path / "polygon.json"
    path.write_text(json.dumps(example_polygon().to_dict()))
    code, out, _ = run(capsys, "dyck", "validate", str(path))
    assert code == 0 and json.loads(out)["valid"]
    code, out, _ = run(capsys, "dyck", "reach", str(path), "A", "B4")
    assert json.loads(out) == {"path": ["A", "B", "B4"], "length": 2}
    code, out, _ = run(capsys, "dyck", "present", str(path), "B1")
    assert json.loads(out)["word"] == {"A": 1, "B": 1, "C": 1}
    code, out, _ = run(capsys, "dyck", "present", str(path), "nowhere")
    assert code == 1 and json.loads(out)["error"] == "UnknownVertex"


def test_invalid_polygon_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": [{"label": "a"}, {"label": "b"}], "edges": [],
                                "cycles": [], "generators": ["a"]}))
    assert run(capsys, "dyck", "validate", str(path))[0] == 1
