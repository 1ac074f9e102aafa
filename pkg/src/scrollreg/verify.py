"""Verification suites: the instance table plus randomized engine checks.

Every randomized check compares the Groebner/resolution machinery with a
brute-force linear-algebra count in a fixed graded piece, so a bug in one
code path cannot hide behind itself.
"""
import random
from math import comb

from .groebner import Ideal, eliminate, hilbert_data
from .poly import PolyRing
from .resolution import (betti_table, check_resolution, frame_betti_table, free_resolution,
                         minimize, regularity)
from .resolution.linalg import monomials_of_degree, rank
from .scroll import ScrollSpec, cone_over, construct, veronese

INSTANCES = [
    (2, (1, 1), 1, 1),
    (2, (1, 1), 1, 2),
    (2, (1, 2), 1, 2),
    (3, (1, 1, 1), 1, 2),
]


# ---- brute-force graded pieces ------------------------------------------


def ideal_piece_rows(gens, degree, nvars):
    """Sparse coefficient rows spanning ``I_degree`` (monomial multiples of generators)."""
    index = {m: i for i, m in enumerate(monomials_of_degree(nvars, degree))}
    rows = []
    for g in gens:
        dg = g.total_degree
        for m in monomials_of_degree(nvars, degree - dg):
            row = {}
            for e, c in g.as_dict().items():
                row[index[tuple(a + b for a, b in zip(e, m))]] = c
            rows.append(row)
    return rows, index


def brute_ideal_dimension(gens, degree, nvars):
    rows, _ = ideal_piece_rows(gens, degree, nvars)
    return rank(rows) if rows else 0


def brute_in_ideal(f, gens):
    """Whether the homogeneous ``f`` lies in the span of the degree piece of ``(gens)``."""
    if not f:
        return True
    nvars = f.ring.nvars
    rows, index = ideal_piece_rows(gens, f.total_degree, nvars)
    target = {index[e]: c for e, c in f.as_dict().items()}
    return rank(rows) == rank(rows + [target])


def image_hilbert_function(images, degree):
    """``dim`` of the span of degree-``degree`` monomials in ``images``."""
    if not images:
        return 0
    ring = images[0].ring
    rows = []
    keys = {}
    for m in monomials_of_degree(len(images), degree):
        f = ring.one
        for g, e in zip(images, m):
            if e:
                f = f * g ** e
        row = {}
        for e, c in f.as_dict().items():
            row[keys.setdefault(e, len(keys))] = c
        rows.append(row)
    return rank(rows)


# ---- random ideals ---------------------------------------------------------


def random_form(ring, degree, rng, terms=3, bound=3):
    mons = monomials_of_degree(ring.nvars, degree)
    picked = rng.sample(mons, min(terms, len(mons)))
    f = ring.from_dict({m: rng.choice([c for c in range(-bound, bound + 1) if c])
                        for m in picked})
    return f


def random_ideal(rng, max_vars=4, max_gens=3, max_degree=3):
    n = rng.randint(2, max_vars)
    ring = PolyRing([f"x{i}" for i in range(n)])
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        f = random_form(ring, rng.randint(1, max_degree), rng, terms=rng.randint(1, 3))
        if f:
            gens.append(f)
    if not gens:
        gens = [ring.gens()[0]]
    return Ideal(ring, gens)


# ---- property checks -------------------------------------------------------


def trial_seeds(seed, trials, salt):
    """Per-trial RNG seeds; ``salt`` is the check's 1-based position in ``PROPERTY_CHECKS``."""
    return [seed * 1000003 + salt * 7919 + t for t in range(trials)]


def check_buchberger(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 1):
        I = random_ideal(random.Random(s))
        gb = I.groebner_basis()
        if not gb.satisfies_buchberger_criterion():
            failures.append(f"seed {s}: S-pair with nonzero remainder")
        elif not gb.is_reduced():
            failures.append(f"seed {s}: basis not reduced")
        elif not all(gb.contains(g) for g in I.generators):
            failures.append(f"seed {s}: generator not in the span of its basis")
        elif not all(brute_in_ideal(g, I.generators) for g in gb):
            failures.append(f"seed {s}: basis element outside the ideal")
    return failures


def check_membership(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 2):
        rng = random.Random(s)
        I = random_ideal(rng)
        ring = I.ring
        top = max(g.total_degree for g in I.generators) + rng.randint(0, 1)
        f = ring.zero
        for g in I.generators:
            if top >= g.total_degree:
                f = f + g * random_form(ring, top - g.total_degree, rng, terms=2)
        if rng.random() < 0.5:
            f = f + random_form(ring, top, rng, terms=1)
        if not f:
            continue
        if I.contains(f) != brute_in_ideal(f, I.generators):
            failures.append(f"seed {s}: membership of {f} disagrees with linear algebra")
    return failures


def check_resolutions(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 3):
        I = random_ideal(random.Random(s), max_vars=4, max_gens=3, max_degree=2)
        res = free_resolution(I)
        rep = check_resolution(res)
        if not rep.ok:
            failures.append(f"seed {s}: frame {rep.failures[:2]}")
            continue
        m = minimize(res)
        rep = check_resolution(m)
        if not rep.ok:
            failures.append(f"seed {s}: minimized {rep.failures[:2]}")
    return failures


def check_minimization(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 4):
        I = random_ideal(random.Random(s), max_vars=4, max_gens=4, max_degree=2)
        res = free_resolution(I)
        m = minimize(res)
        if not m.is_minimal():
            failures.append(f"seed {s}: constant entry survives minimization")
        elif betti_table(m) != frame_betti_table(res):
            failures.append(f"seed {s}: minimized ranks disagree with constant-block ranks")
    return failures


def check_hilbert(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 5):
        rng = random.Random(s)
        I = random_ideal(rng, max_vars=8 if rng.random() < 0.2 else 5, max_gens=3,
                         max_degree=2 if rng.random() < 0.5 else 3)
        hd = hilbert_data(I)
        n = I.ring.nvars
        for m in range(6):
            brute = comb(m + n - 1, n - 1) - brute_ideal_dimension(I.generators, m, n)
            if hd.hilbert_function(m) != brute:
                failures.append(f"seed {s}: HF({m}) = {hd.hilbert_function(m)}, brute {brute}")
                break
    return failures


def check_elimination(seed, trials):
    failures = []
    for s in trial_seeds(seed, trials, 6):
        rng = random.Random(s)
        I = random_ideal(rng, max_vars=4, max_gens=3, max_degree=2)
        ring = I.ring
        drop = [ring.variables[0]]
        J = eliminate(I, drop)
        sub = J.ring
        for g in J.generators:
            if not brute_in_ideal(g.to_ring(ring), I.generators):
                failures.append(f"seed {s}: eliminant {g} not in I")
                break
        n, k = ring.nvars, sub.nvars
        hd = hilbert_data(J) if J.generators else None
        for m in range(4):
            rows, index = ideal_piece_rows(I.generators, m, n)
            dim_i = rank(rows) if rows else 0
            kept = [{i: 1} for e, i in index.items() if e[0] == 0]
            dim_sum = rank(rows + kept) if rows or kept else 0
            brute = dim_i + len(kept) - dim_sum
            got = comb(m + k - 1, k - 1) - hd.hilbert_function(m) if hd else 0
            if got != brute:
                failures.append(f"seed {s}: eliminant has dimension {got} in degree {m}, "
                                f"brute force {brute}")
                break
    return failures


PROPERTY_CHECKS = [
    ("buchberger_criterion", check_buchberger),
    ("membership", check_membership),
    ("resolution_exactness", check_resolutions),
    ("minimization", check_minimization),
    ("hilbert_brute_force", check_hilbert),
    ("elimination_brute_force", check_elimination),
]


# ---- instance table ---------------------------------------------------------


def check_instance(n, a, k1, k2, seed, brute_degrees=3, budget_seconds=None):
    """Construct one instance; return ``(summary, failures)``."""
    from .scroll.construct import parametrization
    spec = ScrollSpec(n, a, k1, k2, seed=seed)
    rep = construct(spec, budget_seconds=budget_seconds)
    failures = rep.failures()
    _, images = parametrization(spec, rep.beta, rep.b)
    for m in range(brute_degrees + 1):
        brute = image_hilbert_function(images, m)
        if rep.X.hilbert.hilbert_function(m) != brute:
            failures.append(f"HF({m}) = {rep.X.hilbert.hilbert_function(m)}, image count {brute}")
    summary = {
        "key": f"n={n},a={list(a)},k1={k1},k2={k2}",
        "d": spec.d, "r": spec.r, "b": rep.b, "degree": rep.X.degree,
        "dimension": rep.X.dimension, "secant_length": rep.secant_length,
        "regularity": rep.regularity, "projection": rep.projection_check,
        "smooth_at_secant": rep.smooth_at_secant,
    }
    return summary, failures


def check_classical():
    """Veronese constants and cone invariance of Betti tables."""
    out = []
    V = veronese("V")
    Vp = veronese("Vprime")
    out.append(("reg(V) = 2", V.regularity() == 2))
    out.append(("reg(V') = 3", Vp.regularity() == 3))
    out.append(("deg V = deg V' = 4, dim 2", (V.degree, Vp.degree, V.dimension, Vp.dimension)
                == (4, 4, 2, 2)))
    for k in (1, 2):
        out.append((f"Betti(cone_over(V, {k})) = Betti(V)",
                    cone_over(V, k).betti_table() == V.betti_table()))
    out.append(("reg(cone_over(V, 1)) = 2", regularity(cone_over(V, 1).betti_table()) == 2))
    return out


def run_suite(name="quick", seed=0, trials=None, budget_seconds=None):
    """Run a suite and return a deterministic, JSON-ready summary."""
    if name not in ("quick", "full"):
        raise ValueError(f"unknown suite {name!r}")
    trials = trials if trials is not None else (10 if name == "quick" else 100)
    rows = INSTANCES[:2] if name == "quick" else INSTANCES
    results = []
    for n, a, k1, k2 in rows:
        summary, failures = check_instance(n, a, k1, k2, seed, budget_seconds=budget_seconds)
        results.append({"name": f"instance {summary['key']}", "passed": not failures,
                        "details": summary, "failures": failures})
    for label, ok in check_classical():
        results.append({"name": label, "passed": bool(ok), "failures": [] if ok else [label]})
    for salt, (label, fn) in enumerate(PROPERTY_CHECKS, start=1):
        failures = fn(seed, trials)
        seeds = trial_seeds(seed, trials, salt)
        results.append({"name": label, "passed": not failures, "trials": trials, "seed": seed,
                        "trial_seeds": [seeds[0], seeds[-1]] if seeds else [],
                        "failures": failures})
    return {"suite": name, "seed": seed, "ok": all(r["passed"] for r in results),
            "results": results}


__all__ = ["run_suite", "trial_seeds", "check_instance", "check_classical", "PROPERTY_CHECKS", "INSTANCES",
           "brute_ideal_dimension", "brute_in_ideal", "image_hilbert_function", "random_ideal"]
