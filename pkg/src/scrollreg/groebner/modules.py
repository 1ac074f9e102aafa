"""Submodules of graded free modules, position-over-term."""
import time

from ..poly import GREVLEX
from . import engine
from .ideal import positive_weight


class FreeModule:
    """Graded free module ``R^k``; generator ``j`` sits in degree ``shifts[j]``."""

    def __init__(self, ring, shifts):
        self.ring = ring
        self.shifts = tuple(int(s) for s in shifts)

    @property
    def rank(self):
        return len(self.shifts)

    def space(self, order=GREVLEX):
        return engine.TermSpace(order.matrix(self.ring), prefix=1,
                                weight=positive_weight(self.ring),
                                pos_shift={(-j,): s for j, s in enumerate(self.shifts)})

    def encode(self, vector, space):
        out = {}
        for j, f in enumerate(vector):
            for m, c in f.as_dict().items():
                out[space.encode(m, (-j,))] = c
        return out

    def decode(self, poly, space):
        comps = [dict() for _ in self.shifts]
        for k, c in poly.items():
            comps[-space.pos(k)[0]][space.exps(k)] = c
        return [self.ring.from_dict(d) for d in comps]


def module_groebner(F, vectors, order=GREVLEX, budget_seconds=None):
    """Reduced POT Groebner basis of the submodule spanned by ``vectors``.

    Position 0 is the largest, so the elements supported on the trailing
    positions generate the intersection with those coordinates.
    """
    space = F.space(order)
    gens = [F.encode(v, space) for v in vectors]
    gens = [g for g in gens if g]
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    polys = engine.buchberger(gens, space, deadline=deadline)
    return [F.decode(p, space) for p in polys]


class ModuleGroebnerBasis:
    """Reduced POT basis of a submodule, with membership testing."""

    def __init__(self, F, vectors, order=GREVLEX, budget_seconds=None):
        self.module = F
        self.space = F.space(order)
        gens = [F.encode(v, self.space) for v in vectors]
        gens = [g for g in gens if g]
        deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
        self._polys = engine.buchberger(gens, self.space, deadline=deadline)
        self._basis = engine.Basis(self.space)
        for p in self._polys:
            self._basis.add(p)
        self.elements = [F.decode(p, self.space) for p in self._polys]

    def normal_form(self, vector):
        enc = self.module.encode(vector, self.space)
        if not enc:
            return list(vector)
        return self.module.decode(engine.reduce_poly(enc, self._basis), self.space)

    def contains(self, vector):
        return all(not c for c in self.normal_form(vector))


def vector_degree(vector, shifts):
    """Degree of a homogeneous vector; ``None`` for the zero vector."""
    for f, s in zip(vector, shifts):
        if f:
            return f.total_degree + s
    return None


def minimal_module_generators(F, vectors):
    """Minimal homogeneous generating subset of the span of ``vectors``."""
    vecs = [v for v in vectors if any(c for c in v)]
    vecs.sort(key=lambda v: vector_degree(v, F.shifts))
    chosen = []
    gb = None
    for v in vecs:
        if gb is not None and gb.contains(v):
            continue
        chosen.append(v)
        gb = ModuleGroebnerBasis(F, chosen)
    return chosen
