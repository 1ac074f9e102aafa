"""Acceptance criteria, one test and one PASS/FAIL line each.

Run ``pytest tests/test_acceptance.py -v`` (the lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` for just the lines.
All comparisons are exact integers: tolerance zero.
"""
import json
import os
import subprocess
import sys
from functools import lru_cache

from scrollreg.scroll import ScrollSpec, construct, cone_over, veronese
from scrollreg.verify import PROPERTY_CHECKS, check_instance, trial_seeds

SEED = 7
PROPERTY_SEED = 0
TRIALS = 100

# (n, a, k1, k2) -> expected exact values
TABLE = [
    ((2, (1, 1), 1, 1), {"d": 4, "r": 5, "degree": 4, "dimension": 2, "sum_b": 4,
                         "secant_length": 2, "regularity": 2}),
    ((2, (1, 1), 1, 2), {"d": 5, "r": 5, "degree": 5, "dimension": 2, "sum_b": 5,
                         "secant_length": 3, "regularity": 3, "projection_degree": 2}),
    ((2, (1, 2), 1, 2), {"d": 6, "r": 6, "degree": 6, "dimension": 2, "sum_b": 6,
                         "secant_length": 3, "regularity": 3}),
    ((3, (1, 1, 1), 1, 2), {"d": 6, "r": 7, "degree": 6, "dimension": 3, "sum_b": 6,
                            "secant_length": 3, "regularity": 3}),
]


@lru_cache(maxsize=None)
def instance(params):
    return check_instance(*params, seed=SEED)


@lru_cache(maxsize=None)
def report(params):
    return construct(ScrollSpec(*params, seed=SEED))


# lines printed so far; conftest.py repeats them in pytest's terminal summary
VERDICTS = []


def _emit(line):
    VERDICTS.append(line)
    print(line, flush=True)


def verdict(number, title, problems):
    status = "PASS" if not problems else "FAIL"
    line = f"{status} criterion {number}: {title}"
    if problems:
        line += " -- " + "; ".join(problems[:6])
    _emit(line)
    return not problems


# ---- the criteria -------------------------------------------------------------


def criterion_1():
    problems = []
    for params, want in TABLE:
        summary, failures = instance(params)
        rep = report(params)
        spec = rep.spec
        got = {"d": spec.d, "r": spec.r, "degree": rep.X.degree, "dimension": rep.X.dimension,
               "sum_b": sum(rep.b), "secant_length": rep.secant_length,
               "regularity": rep.regularity,
               "projection_degree": rep.projection_check["degree"]}
        for key, value in want.items():
            if got[key] != value:
                problems.append(f"{summary['key']}: {key} = {got[key]}, expected {value}")
        extremal = spec.d - spec.r + spec.n + 1
        if not (rep.regularity == extremal == rep.secant_length == spec.k1 + spec.k2):
            problems.append(f"{summary['key']}: reg {rep.regularity}, secant "
                            f"{rep.secant_length}, d-r+n+1 = {extremal}")
        problems += [f"{summary['key']}: {f}" for f in failures]
    return problems


def criterion_2():
    problems = []
    V, Vp = veronese("V_in_P5"), veronese("Vprime_in_P4")
    if V.regularity() != 2:
        problems.append(f"reg(V) = {V.regularity()}")
    if Vp.regularity() != 3:
        problems.append(f"reg(V') = {Vp.regularity()}")
    for k in (1, 2):
        if cone_over(V, k).betti_table() != V.betti_table():
            problems.append(f"Betti table of cone_over(V, {k}) differs from V")
    return problems


def criterion_3():
    problems = []
    for params, _ in TABLE:
        rep = report(params)
        s, pc = rep.spec, rep.projection_check
        Y = rep.projection
        if pc["dimension"] != s.n:
            problems.append(f"{params}: projection dimension {pc['dimension']}")
        if pc["degree"] != s.r - s.n - 1:
            problems.append(f"{params}: projection degree {pc['degree']} != {s.r - s.n - 1}")
        if Y.degree != Y.codimension + 1 or not pc["minimal_degree"]:
            problems.append(f"{params}: degree {Y.degree}, codimension {Y.codimension}")
    return problems


def criterion_4():
    problems = []
    for params, _ in TABLE:
        rep = report(params)
        if not rep.smooth_at_secant:
            bad = [p for p in rep.smoothness if not p["smooth"]]
            problems.append(f"{params}: singular at {bad}")
    return problems


def criterion_5():
    lines, problems = [], []
    for salt, (name, fn) in enumerate(PROPERTY_CHECKS, start=1):
        failures = fn(PROPERTY_SEED, TRIALS)
        seeds = trial_seeds(PROPERTY_SEED, TRIALS, salt)
        lines.append(f"{name}: {TRIALS} trials, seeds {seeds[0]}..{seeds[-1]}, "
                     f"{len(failures)} failures")
        problems += [f"{name}: {f}" for f in failures]
    for line in lines:
        _emit("    " + line)
    return problems


_DETERMINISM_SCRIPT = (
    "import json, sys\n"
    "from scrollreg.scroll import ScrollSpec, construct\n"
    "rep = construct(ScrollSpec(2, (1, 1), 1, 2, seed=7))\n"
    "sys.stdout.write(json.dumps(rep.to_json(), indent=2, sort_keys=True))\n"
)


def criterion_6():
    outputs = []
    for hashseed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        proc = subprocess.run([sys.executable, "-c", _DETERMINISM_SCRIPT], env=env,
                              capture_output=True)
        if proc.returncode:
            return [f"run failed: {proc.stderr.decode()[-300:]}"]
        outputs.append(proc.stdout)
    problems = []
    if outputs[0] != outputs[1]:
        problems.append("report bytes differ between two runs")
    in_process = json.dumps(report((2, (1, 1), 1, 2)).to_json(), indent=2, sort_keys=True)
    if in_process.encode() != outputs[0]:
        problems.append("in-process report differs from a fresh interpreter")
    return problems


CRITERIA = [
    (1, "instance table (degree, dimension, splitting sum, secant length, regularity)",
     criterion_1),
    (2, "reg(V) = 2, reg(V') = 3, Betti(cone_over(V, k)) = Betti(V) for k = 1, 2", criterion_2),
    (3, "projection from the line has dimension n, degree r-n-1 = codim+1", criterion_3),
    (4, "Jacobian smoothness along the secant scheme", criterion_4),
    (5, f"randomized engine properties, {TRIALS} trials each", criterion_5),
    (6, "byte-identical report JSON for a fixed seed", criterion_6),
]


def _run(number):
    _, title, fn = CRITERIA[number - 1]
    return verdict(number, title, fn())


def test_criterion_1_instance_table():
    assert _run(1)


def test_criterion_2_classical_constants():
    assert _run(2)


def test_criterion_3_projection_minimal_degree():
    assert _run(3)


def test_criterion_4_smooth_along_secant():
    assert _run(4)


def test_criterion_5_randomized_properties():
    assert _run(5)


def test_criterion_6_determinism():
    assert _run(6)


if __name__ == "__main__":
    results = [_run(k) for k, _, _ in CRITERIA]
    sys.exit(0 if all(results) else 1)
