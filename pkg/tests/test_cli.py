import json
import subprocess
import sys

import pytest

from scrollreg.cli import main

CUBIC = {"variables": ["x0", "x1", "x2", "x3"],
         "generators": ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]}
SPEC = {"n": 2, "a": [1, 1], "k1": 1, "k2": 2, "seed": 7}


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_text_and_json(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, out, _ = run(capsys, "betti", path)
    assert code == 0
    assert out.splitlines()[-1] == "    2: 3 2"
    code, out, _ = run(capsys, "betti", path, "--format", "json")
    data = json.loads(out)
    assert data["entries"] == [{"beta": 3, "i": 0, "j": 2}, {"beta": 2, "i": 1, "j": 3}]
    assert data["regularity"] == 2 and data["notes"] == []


def test_betti_with_degree_cap(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, out, _ = run(capsys, "betti", path, "--degree-cap", "6", "--format", "json")
    assert code == 0
    assert json.loads(out)["check"] == {"degree_cap": 6, "failures": [], "ok": True}


def test_degree_cap_below_two_is_input_error(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, _, err = run(capsys, "betti", path, "--degree-cap", "1")
    assert code == 1 and "at least 2" in err


def test_regularity_of_cubic_form(tmp_path, capsys):
    path = write(tmp_path, "f.json", {"variables": ["x", "y", "z"],
                                      "generators": ["x^3 + y^3 + z^3"]})
    code, out, _ = run(capsys, "regularity", path)
    assert (code, out) == (0, "3\n")


def test_regularity_of_veronese(tmp_path, capsys):
    from scrollreg.scroll import veronese
    V = veronese("V")
    path = write(tmp_path, "v.json", {"variables": list(V.ring.variables),
                                      "generators": [str(g) for g in V.ideal.generators]})
    code, out, _ = run(capsys, "regularity", path, "--format", "json")
    assert code == 0 and json.loads(out)["regularity"] == 2


def test_unsaturated_input_is_saturated_with_note(tmp_path, capsys):
    gens = [f"({g})*{v}" for g in CUBIC["generators"] for v in CUBIC["variables"]]
    path = write(tmp_path, "junk.json", {"variables": CUBIC["variables"], "generators": gens})
    code, out, _ = run(capsys, "regularity", path)
    assert code == 0
    assert out == "2\nnote: input was not saturated; the saturation was used\n"


def test_zero_ideal_regularity_flagged(tmp_path, capsys):
    path = write(tmp_path, "zero.json", {"variables": ["x", "y"], "generators": []})
    code, out, _ = run(capsys, "regularity", path, "--format", "json")
    assert code == 0
    assert json.loads(out) == {"empty": True, "notes": [], "regularity": 0}


def test_order_flag(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, out, _ = run(capsys, "betti", path, "--order", "lex", "--format", "json")
    assert code == 0 and json.loads(out)["regularity"] == 2
    code, _, err = run(capsys, "betti", path, "--order", "sideways")
    assert code == 1 and "sideways" in err


@pytest.mark.parametrize("text,needle", [
    ('{"variables": ["x"], "generators": ["x^2"', "position"),
    ('[1, 2]', "expected an object"),
    ('{"variables": ["x"], "generators": ["x +* x"]}', "position"),
    ('{"variables": ["x"], "generators": ["y^2"]}', "unknown variable 'y'"),
    ('{"variables": ["x", "y"], "generators": ["x^2 - y"]}', "not homogeneous"),
])
def test_malformed_ideal_files(tmp_path, capsys, text, needle):
    path = write(tmp_path, "bad.json", text)
    code, _, err = run(capsys, "betti", path)
    assert code == 1
    assert needle in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "regularity", str(tmp_path / "nope.json"))
    assert code == 1 and "cannot read" in err


def test_secant_and_project(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, out, _ = run(capsys, "secant", path, "--line", "x0,x3")
    assert (code, out) == (0, "2\n")
    code, out, _ = run(capsys, "secant", path, "--line", "x1,x2")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "project", path, "--line", "x1,x2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["variables"] == ["x0", "x3"]
    assert data["dimension"] == 1 and data["dimension_drop"] == 0


def test_line_contained_exit_three(tmp_path, capsys):
    path = write(tmp_path, "q.json", {"variables": ["x0", "x1", "x2", "x3"],
                                      "generators": ["x0*x3 - x1*x2"]})
    for cmd in ("secant", "project"):
        code, _, err = run(capsys, cmd, path, "--line", "x0,x1")
        assert code == 3
        assert "line contained in X" in err


def test_bad_line_argument(tmp_path, capsys):
    path = write(tmp_path, "cubic.json", CUBIC)
    code, _, err = run(capsys, "secant", path, "--line", "x0,w")
    assert code == 1 and "'w'" in err
    code, _, _ = run(capsys, "secant", path, "--line", "x0")
    assert code == 1


def test_construct_report(tmp_path, capsys):
    path = write(tmp_path, "spec.json", SPEC)
    code, out, _ = run(capsys, "construct", path, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["secant_length"] == 3 and data["regularity"] == 3
    assert data["b"] == [2, 3] and data["failures"] == []
    assert data["projection_check"]["degree"] == 2
    code, out, _ = run(capsys, "construct", path)
    assert "regularity 3" in out and "FAIL" not in out


def test_construct_report_feeds_secant_and_project(tmp_path, capsys):
    spec = write(tmp_path, "spec.json", SPEC)
    report = str(tmp_path / "report.json")
    assert run(capsys, "construct", spec, "--format", "json", "--out", report)[0] == 0
    code, out, _ = run(capsys, "secant", report, "--line", "u0,u1")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "project", report, "--line", "u0,u1", "--format", "json")
    data = json.loads(out)
    assert (data["dimension"], data["degree"], data["minimal_degree"]) == (2, 2, True)


def test_construct_seed_flag(tmp_path, capsys):
    spec = write(tmp_path, "spec.json", {k: v for k, v in SPEC.items()})
    code, out, _ = run(capsys, "construct", spec, "--seed", "11", "--format", "json")
    assert code == 0 and json.loads(out)["spec"]["seed"] == 11


def test_construct_malformed_json(tmp_path, capsys):
    path = write(tmp_path, "spec.json", '{"n": 2, "a": [1, 1')
    code, _, err = run(capsys, "construct", path)
    assert code == 1
    assert "line 1 column" in err and "position" in err


def test_construct_invalid_spec(tmp_path, capsys):
    path = write(tmp_path, "spec.json", {"n": 2, "a": [1, 1], "k1": 1, "k2": 2})
    code, _, err = run(capsys, "construct", path)
    assert code == 1 and "alpha" in err


def test_construct_degenerate_alpha(tmp_path, capsys):
    spec = {"n": 2, "a": [1, 1], "k1": 1, "k2": 1,
            "alpha": [["s", "s"], ["t", "t"], ["s^2", "s^2"], ["t^2", "t^2"]]}
    path = write(tmp_path, "deg.json", spec)
    code, _, err = run(capsys, "construct", path)
    assert code == 2
    assert "alpha not fiberwise injective" in err


def test_construct_output_is_byte_identical(tmp_path, capsys):
    path = write(tmp_path, "spec.json", SPEC)
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    run(capsys, "construct", path, "--format", "json", "--out", a)
    run(capsys, "construct", path, "--format", "json", "--out", b)
    with open(a, "rb") as fa, open(b, "rb") as fb:
        outs = [fa.read(), fb.read()]
    assert outs[0] == outs[1]


def test_verify_quick(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "quick", "--seed", "2", "--trials", "5",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and data["seed"] == 2
    names = [r["name"] for r in data["results"]]
    assert "resolution_exactness" in names and "reg(V') = 3" in names
    code, again, _ = run(capsys, "verify", "quick", "--seed", "2", "--trials", "5",
                         "--format", "json")
    assert again == out


def test_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "scrollreg.cli", "--help"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    for name in ("construct", "betti", "regularity", "secant", "project", "verify"):
        assert name in proc.stdout


def test_verify_full_reproduces_instance_table():
    from scrollreg.verify import run_suite
    summary = run_suite("full", seed=0, trials=3)
    assert summary["ok"]
    rows = {r["name"]: r["details"] for r in summary["results"] if "details" in r}
    assert len(rows) == 4
    assert [d["regularity"] for d in rows.values()] == [2, 3, 3, 3]
    assert [d["secant_length"] for d in rows.values()] == [2, 3, 3, 3]
