"""Embedded projective schemes, lines, secant schemes and projections."""
from itertools import combinations

from ..errors import DegenerateInputError, LineContainedError
from ..groebner import (Ideal, eliminate, hilbert_data, irrelevant_ideal, kernel_of_ring_map,
                        saturate)
from ..poly import PolyRing, binary_form_gcd, to_qq
from ..poly import univariate as uni
from ..poly.ops import binary_form_to_univariate
from ..resolution import betti_table, minimal_resolution, regularity
from .bundle import BINARY


class EmbeddedScheme:
    """Subscheme of ``Proj(ring)`` given by a saturated homogeneous ideal.

    The ideal is saturated by the irrelevant ideal on construction unless the
    caller vouches for it with ``saturated=True``. Groebner data, Hilbert data
    and the minimal resolution are computed on demand and cached.
    """

    def __init__(self, ideal, saturated=False, name="", budget_seconds=None):
        if not ideal.ring.is_standard_graded():
            ideal = Ideal(ideal.ring.with_grading(None), [
                g.to_ring(ideal.ring.with_grading(None)) for g in ideal.generators])
        self.was_saturated = True
        if not saturated:
            sat = saturate(ideal, irrelevant_ideal(ideal.ring), budget_seconds=budget_seconds)
            self.was_saturated = sat is ideal or sat == ideal
            ideal = sat
        self.ideal = ideal
        self.ring = ideal.ring
        self.name = name
        self.flags = {}
        self._hilbert = None
        self._resolution = None
        self.budget_seconds = budget_seconds

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"EmbeddedScheme({label}{len(self.ideal)} generators in {self.ring})"

    @property
    def ambient_dimension(self):
        return self.ring.nvars - 1

    def groebner_basis(self):
        return self.ideal.groebner_basis(budget_seconds=self.budget_seconds)

    @property
    def hilbert(self):
        if self._hilbert is None:
            self._hilbert = hilbert_data(self.ideal)
        return self._hilbert

    @property
    def dimension(self):
        return self.hilbert.projective_dimension

    @property
    def degree(self):
        return self.hilbert.degree

    @property
    def codimension(self):
        return self.ambient_dimension - self.dimension

    def resolution(self):
        if self._resolution is None:
            self._resolution = minimal_resolution(self.ideal, budget_seconds=self.budget_seconds)
        return self._resolution

    def betti_table(self):
        return betti_table(self.resolution())

    def regularity(self):
        return regularity(self.betti_table())

    def minimal_generators(self):
        """Minimal generators, read off the first differential of the minimal resolution."""
        res = self.resolution()
        if not res.differentials:
            return []
        return list(res.differentials[0].entries[0])

    def is_minimal_degree(self):
        return self.degree == self.codimension + 1

    def to_json(self):
        return {
            "variables": list(self.ring.variables),
            "generators": [str(g) for g in self.minimal_generators()],
            "dimension": self.dimension,
            "degree": self.degree,
        }


def _scheme(ring, gens, name, saturated=True):
    return EmbeddedScheme(Ideal(ring, gens), saturated=saturated, name=name)


def scroll_variables(a, prefix="x"):
    return [f"{prefix}{i}_{j}" for i, ai in enumerate(a, start=1) for j in range(ai + 1)]


def _scroll_minors(ring, a, prefix="x"):
    top, bottom = [], []
    for i, ai in enumerate(a, start=1):
        for j in range(ai):
            top.append(ring.var(f"{prefix}{i}_{j}"))
            bottom.append(ring.var(f"{prefix}{i}_{j + 1}"))
    gens = []
    seen = set()
    for p, q in combinations(range(len(top)), 2):
        m = top[p] * bottom[q] - top[q] * bottom[p]
        if m:
            key = str(m.monic())
            if key not in seen:
                seen.add(key)
                gens.append(m)
    return gens


def scroll_ideal(a):
    """The rational normal scroll ``S(a_1..a_n)`` as 2x2 minors of Hankel blocks."""
    a = [int(x) for x in a]
    if not a:
        raise ValueError("a scroll needs at least one twist")
    if any(x < 1 for x in a):
        raise ValueError("scroll twists must be positive")
    ring = PolyRing(scroll_variables(a))
    return _scheme(ring, _scroll_minors(ring, a), f"S{tuple(a)}")


def cone_scroll_ideal(zeros, a):
    """``S(0..0, a)`` with ``zeros`` vertex coordinates ``u0, u1, ...`` in front."""
    if zeros < 1:
        raise ValueError("a cone needs at least one vertex coordinate")
    a = [int(x) for x in a]
    if not a or any(x < 1 for x in a):
        raise ValueError("scroll twists must be positive")
    ring = PolyRing([f"u{i}" for i in range(zeros)] + scroll_variables(a))
    return _scheme(ring, _scroll_minors(ring, a), f"S{(0,) * zeros + tuple(a)}")


def _fresh(ring, count, stem):
    out, i = [], 0
    while len(out) < count:
        if f"{stem}{i}" not in ring:
            out.append(f"{stem}{i}")
        i += 1
    return out


def cone_over(X, k=1):
    """Cone with a ``k``-dimensional extra vertex: same generators, ``k`` new variables."""
    if k < 1:
        raise ValueError("k must be positive")
    ring = X.ring.extend(_fresh(X.ring, k, "v"))
    ideal = Ideal(ring, [g.to_ring(ring) for g in X.ideal.generators], check=False)
    return EmbeddedScheme(ideal, saturated=True, name=f"cone({X.name})")


def veronese(which="V"):
    """The Veronese surface ``V`` in P^5 or its isomorphic projection ``V'`` in P^4.

    ``V`` is cut out by the 2x2 minors of the generic symmetric 3x3 matrix.
    ``V'`` is the image of ``P^2`` under the quadrics ``st, su, tu, s^2 - t^2,
    t^2 - u^2``: the projection of ``V`` from the point of the quadric
    ``s^2 + t^2 + u^2``, which has rank 3 and so lies off the secant variety.
    """
    if which in ("V", "V_in_P5"):
        ring = PolyRing([f"x{i}" for i in range(6)])
        x = ring.gens()
        M = [[x[0], x[1], x[2]], [x[1], x[3], x[4]], [x[2], x[4], x[5]]]
        gens, seen = [], set()
        for r in combinations(range(3), 2):
            for c in combinations(range(3), 2):
                m = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
                key = str(m.monic())
                if m and key not in seen:
                    seen.add(key)
                    gens.append(m)
        ideal = Ideal(ring, gens).reduced()
        return EmbeddedScheme(ideal, saturated=True, name="V")
    if which in ("Vprime", "V'", "Vprime_in_P4"):
        plane = PolyRing(["s", "t", "u"])
        s, t, u = plane.gens()
        images = [s * t, s * u, t * u, s * s - t * t, t * t - u * u]
        ring = PolyRing([f"y{i}" for i in range(5)])
        return EmbeddedScheme(kernel_of_ring_map(ring, images), saturated=True, name="V'")
    raise ValueError(f"unknown Veronese variant {which!r}")


class Line:
    """The line through points ``p`` and ``q`` of ``Proj(ring)``.

    It is parametrized as ``s * p + t * q``. A coordinate line keeps two
    coordinates and sets the rest to zero; ``coordinates`` names them.
    """

    def __init__(self, ring, p, q, coordinates=None):
        self.ring = ring
        self.p = tuple(to_qq(c) for c in p)
        self.q = tuple(to_qq(c) for c in q)
        if len(self.p) != ring.nvars or len(self.q) != ring.nvars:
            raise ValueError("points need one coordinate per variable")
        if all(self.p[i] * self.q[j] == self.p[j] * self.q[i]
               for i in range(ring.nvars) for j in range(i + 1, ring.nvars)):
            raise DegenerateInputError("the two points do not span a line")
        self.coordinates = tuple(coordinates) if coordinates else None

    @classmethod
    def coordinate(cls, ring, names):
        names = tuple(names)
        if len(names) != 2 or names[0] == names[1]:
            raise ValueError("a coordinate line keeps exactly two distinct coordinates")
        i, j = ring.index(names[0]), ring.index(names[1])
        p = [0] * ring.nvars
        q = [0] * ring.nvars
        p[i] = 1
        q[j] = 1
        return cls(ring, p, q, coordinates=names)

    def __repr__(self):
        if self.coordinates:
            return f"Line({self.coordinates})"
        return f"Line(p={list(map(str, self.p))}, q={list(map(str, self.q))})"

    def images(self):
        s, t = BINARY.gens()
        return {v: s * a + t * b if (a or b) else BINARY.zero
                for v, a, b in zip(self.ring.variables, self.p, self.q)}

    def restrict(self, f):
        return f.substitute(self.images(), target=BINARY)

    def to_json(self):
        if self.coordinates:
            return {"coordinates": list(self.coordinates)}
        return {"p": [str(c) for c in self.p], "q": [str(c) for c in self.q]}


def secant_divisor(X, line):
    """Monic gcd of the restrictions of ``I_X`` to ``line``: the scheme ``X cap line``."""
    if line.ring != X.ring:
        raise ValueError("the line lives in another ring")
    forms = [line.restrict(g) for g in X.ideal.generators]
    forms = [f for f in forms if f]
    if not forms:
        raise LineContainedError("line contained in X")
    return binary_form_gcd(forms)


def secant_scheme_length(X, line):
    """Length of ``X cap line``; 0 when the line misses ``X``."""
    g = secant_divisor(X, line)
    return 0 if g.is_constant() else g.total_degree


def project_from_line(X, line, budget_seconds=None):
    """Image of ``X`` under projection from a coordinate line.

    The line's coordinates are eliminated and the result is saturated. If the
    image has smaller dimension than ``X`` (for instance ``X`` a cone with
    vertex on the line), the drop is recorded in ``flags["dimension_drop"]``.
    """
    if not line.coordinates:
        raise ValueError("projection is implemented for coordinate lines")
    image = eliminate(X.ideal, list(line.coordinates), budget_seconds=budget_seconds)
    # an elimination ideal need not be saturated in general; primes pass the cheap test
    Y = EmbeddedScheme(image, name=f"proj({X.name})", budget_seconds=budget_seconds)
    drop = X.dimension - Y.dimension
    Y.flags["dimension_drop"] = drop
    Y.flags["minimal_degree"] = Y.is_minimal_degree()
    return Y


# ---- smoothness along the secant scheme ---------------------------------


def _reduce(p, h):
    return uni.divmod_(p, h)[1]


def _mul_mod(p, q, h):
    return _reduce(uni.mul(p, q), h)


def _eval_mod(f, point, h):
    """``f`` at a point whose coordinates are residues modulo ``h``."""
    total = []
    powers = {}
    for m, c in f.as_dict().items():
        val = [to_qq(c)]
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                if key not in powers:
                    acc = [to_qq(1)]
                    for _ in range(e):
                        acc = _mul_mod(acc, point[i], h)
                    powers[key] = acc
                val = _mul_mod(val, powers[key], h)
        total = uni.add(total, val)
    return _reduce(total, h)


def _rank_split(rows, h, done=0):
    """Rank of ``rows`` over ``Q[s]/(h)`` for squarefree ``h``, split along zero divisors.

    Returns ``[(factor, rank)]`` with the factors multiplying to ``h``.
    """
    rows = [[_reduce(e, h) for e in row] for row in rows]
    rank = done
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rows and col < ncols:
        pivot = None
        for i, row in enumerate(rows):
            e = row[col]
            if not e:
                continue
            g = uni.gcd(e, h)
            if uni.degree(g) > 0:
                other = uni.divmod_(h, g)[0]
                return _rank_split(rows, g, rank) + _rank_split(rows, other, rank)
            pivot = i
            break
        if pivot is None:
            col += 1
            continue
        prow = rows.pop(pivot)
        inv = uni.inverse_mod(prow[col], h)
        prow = [_mul_mod(e, inv, h) for e in prow]
        new = []
        for row in rows:
            f = row[col]
            if f:
                row = [_reduce(uni.sub(x, uni.mul(f, y)), h) for x, y in zip(row, prow)]
            new.append(row)
        rows = new
        rank += 1
        col += 1
    return [(uni.monic(h), rank)]


def secant_point_report(X, line):
    """Jacobian rank of ``I_X`` at each point of ``X cap line``.

    One entry per squarefree part of the secant divisor; coordinates live in
    ``Q[s]/(h)``, and ``h`` is split further whenever a pivot is a zero
    divisor, so no factorization is needed. Multiplicities are reported
    alongside; smoothness is judged at the underlying reduced points.
    """
    g = secant_divisor(X, line)
    codim = X.codimension
    gens = list(X.ideal.generators)
    jac = [[f.partial(v) for v in X.ring.variables] for f in gens]
    out = []
    coeffs, _, t_order = binary_form_to_univariate(g)
    pieces = []
    if t_order:
        # the point (s:t) = (1:0) is p itself; work modulo s so residues are constants
        point = [[c] if c else [] for c in line.p]
        pieces.append(([to_qq(0), to_qq(1)], t_order, point, "t"))
    for h, mult in uni.squarefree_decomposition(coeffs):
        point = [uni.trim([b, a]) for a, b in zip(line.p, line.q)]
        pieces.append((h, mult, point, None))
    for h, mult, point, label in pieces:
        rows = [[_eval_mod(f, point, h) for f in row] for row in jac]
        for factor, rk in _rank_split(rows, h):
            if label == "t":
                form = BINARY.var("t")
            else:
                form = BINARY.from_dict({(i, len(factor) - 1 - i): c
                                         for i, c in enumerate(factor) if c})
            out.append({"factor": str(form), "multiplicity": mult, "rank": rk,
                        "expected_rank": codim, "smooth": rk == codim})
    return out


def jacobian_smooth_at_secant(X, line):
    """True when ``X`` is smooth at every point of ``X cap line``."""
    return all(item["smooth"] for item in secant_point_report(X, line))


__all__ = ["EmbeddedScheme", "scroll_ideal", "cone_scroll_ideal", "cone_over", "veronese",
           "Line", "secant_divisor", "secant_scheme_length", "project_from_line",
           "secant_point_report", "jacobian_smooth_at_secant", "scroll_variables"]
