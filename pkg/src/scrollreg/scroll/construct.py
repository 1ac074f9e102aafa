"""The scroll construction: alpha -> splitting type -> beta -> X in P^r."""
import time

from ..errors import DegenerateInputError
from ..groebner import Ideal, kernel_of_ring_map
from ..poly import PolyRing
from ..poly.coeffs import qq_str
from .bundle import BINARY, ScrollSpec, cokernel_map, compose
from .schemes import (EmbeddedScheme, Line, project_from_line, scroll_variables,
                      secant_divisor, secant_point_report)


def ambient_ring(a):
    """Coordinates ``u0, u1, x{i}_{j}`` of the cone ``S(0, 0, a)``."""
    return PolyRing(["u0", "u1"] + scroll_variables(a))


def vertex_line(ring):
    return Line.coordinate(ring, ("u0", "u1"))


def parametrization(spec, beta, b):
    """Images of the ambient coordinates in the Cox ring of ``P(O(b_1) + .. + O(b_n))``.

    ``deg s = deg t = (1, 0)`` and ``deg z_k = (-b_k, 1)``, so every image has
    multidegree ``(0, 1)``.
    """
    n = len(b)
    znames = [f"z{k}" for k in range(1, n + 1)]
    cox = PolyRing(["s", "t"] + znames,
                   [[1, 1] + [-x for x in b], [0, 0] + [1] * n])
    z = [cox.var(name) for name in znames]

    def lift(f):
        return f.to_ring(cox)

    images = []
    for col in (0, 1):
        acc = cox.zero
        for k in range(n):
            if beta[k][col]:
                acc = acc + z[k] * lift(beta[k][col])
        images.append(acc)
    for i, ai in enumerate(spec.a):
        col = 2 + i
        for j in range(ai + 1):
            mono = cox.monomial((ai - j, j) + (0,) * n)
            acc = cox.zero
            for k in range(n):
                if beta[k][col]:
                    acc = acc + z[k] * lift(beta[k][col]) * mono
            images.append(acc)
    return cox, images


def projection_matrix(cox, images, b):
    """Coefficients of the images in the basis ``z_k s^(b_k - m) t^m``."""
    n = len(b)
    basis = []
    for k in range(n):
        for m in range(b[k] + 1):
            e = [b[k] - m, m] + [0] * n
            e[2 + k] = 1
            basis.append(tuple(e))
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for f in images:
        row = [0] * len(basis)
        for e, c in f.as_dict().items():
            row[index[e]] = c
        rows.append(row)
    return rows


class ConstructionReport:
    """Everything computed for one spec, plus the invariant checks."""

    def __init__(self, spec, b, beta, projection_matrix, X, secant_divisor, secant_length,
                 betti, regularity, projection, smoothness, timings):
        self.spec = spec
        self.b = b
        self.beta = beta
        self.projection_matrix = projection_matrix
        self.X = X
        self.secant_divisor = secant_divisor
        self.secant_length = secant_length
        self.betti = betti
        self.regularity = regularity
        self.projection = projection
        self.smoothness = smoothness
        self.timings = timings

    @property
    def projection_check(self):
        Y = self.projection
        return {"degree": Y.degree, "dimension": Y.dimension,
                "minimal_degree": Y.is_minimal_degree(),
                "dimension_drop": Y.flags.get("dimension_drop", 0)}

    @property
    def smooth_at_secant(self):
        return all(item["smooth"] for item in self.smoothness)

    def failures(self):
        """Itemized violations of the invariants the construction should satisfy."""
        s = self.spec
        out = []
        expected = s.expected_secant_length

        def want(label, got, value):
            if got != value:
                out.append(f"{label}: got {got}, expected {value}")
        want("dimension", self.X.dimension, s.n)
        want("degree", self.X.degree, s.d)
        want("sum of splitting type", sum(self.b), s.d)
        want("secant length", self.secant_length, expected)
        want("k1 + k2", s.k1 + s.k2, expected)
        want("regularity", self.regularity, expected)
        if self.regularity < self.secant_length:
            out.append("regularity below the secant length")
        pc = self.projection_check
        want("projection degree", pc["degree"], s.r - s.n - 1)
        want("projection dimension", pc["dimension"], s.n)
        if not pc["minimal_degree"]:
            out.append("projection is not of minimal degree")
        if not self.smooth_at_secant:
            out.append("X is singular at a point of the secant scheme")
        return out

    @property
    def ok(self):
        return not self.failures()

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "b": list(self.b),
            "sum_b": sum(self.b),
            "d_plus_n_minus_1": self.spec.d + self.spec.n - 1,
            "beta": [[str(f) for f in row] for row in self.beta],
            "projection_matrix": [[qq_str(c) for c in row] for row in self.projection_matrix],
            "X": self.X.to_json(),
            "hilbert": self.X.hilbert.to_json(),
            "secant_divisor": str(self.secant_divisor),
            "secant_length": self.secant_length,
            "regularity": self.regularity,
            "betti": self.betti.to_json(),
            "projection_check": self.projection_check,
            "projection_generators": [str(g) for g in self.projection.ideal.generators],
            "smooth_at_secant": self.smooth_at_secant,
            "secant_points": self.smoothness,
            "failures": self.failures(),
        }


def construct(spec, budget_seconds=None):
    """Run the construction for ``spec`` and certify its invariants.

    Raises ``DegenerateInputError`` when the image does not have dimension
    ``n`` and degree ``d`` (alpha is outside the generic situation).
    """
    if not isinstance(spec, ScrollSpec):
        raise TypeError("construct expects a ScrollSpec")
    timings = {}
    clock = time.monotonic()

    def lap(name):
        nonlocal clock
        now = time.monotonic()
        timings[name] = round(now - clock, 3)
        clock = now

    alpha = spec.alpha
    beta, b = cokernel_map(alpha)
    if any(f for row in compose(beta, alpha) for f in row):
        raise DegenerateInputError("beta * alpha is not zero")
    lap("cokernel")
    ring = ambient_ring(spec.a)
    cox, images = parametrization(spec, beta, b)
    P = projection_matrix(cox, images, b)
    ideal = kernel_of_ring_map(ring, images, budget_seconds=budget_seconds)
    X = EmbeddedScheme(Ideal(ring, ideal.generators, check=False), saturated=True,
                       name=f"X{tuple(spec.a)},{spec.k1},{spec.k2}",
                       budget_seconds=budget_seconds)
    lap("kernel")
    if X.dimension != spec.n or X.degree != spec.d:
        raise DegenerateInputError(
            f"image not of expected dimension/degree: dim {X.dimension} (want {spec.n}), "
            f"degree {X.degree} (want {spec.d})")
    line = vertex_line(ring)
    g = secant_divisor(X, line)
    length = 0 if g.is_constant() else g.total_degree
    lap("secant")
    B = X.betti_table()
    reg = X.regularity()
    lap("resolution")
    Y = project_from_line(X, line, budget_seconds=budget_seconds)
    _ = Y.degree
    lap("projection")
    smooth = secant_point_report(X, line)
    lap("jacobian")
    return ConstructionReport(spec, b, beta, P, X, g, length, B, reg, Y, smooth, timings)


__all__ = ["construct", "ConstructionReport", "ambient_ring", "vertex_line",
           "parametrization", "projection_matrix", "BINARY"]
