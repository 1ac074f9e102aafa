"""Ideals, Groebner bases and the operations built on them."""
import itertools
import time

from ..errors import NotHomogeneousError, RingMismatchError, UnknownVariableError
from ..poly import GREVLEX, MonomialOrder, PolyRing, Polynomial, block_order, grevlex_last
from ..poly.ring import IDENTIFIER
from . import engine


def positive_weight(ring):
    """A strictly positive integer combination of the ring's grading rows.

    Falls back to the standard degree when no small combination is positive.
    """
    rows = ring.grading
    if all(w > 0 for w in rows[0]):
        return rows[0]
    for lam in itertools.product(range(0, 13), repeat=len(rows)):
        w = tuple(sum(l * row[i] for l, row in zip(lam, rows)) for i in range(ring.nvars))
        if all(x > 0 for x in w):
            return w
    return (1,) * ring.nvars


def term_space(ring, order):
    return engine.TermSpace(order.matrix(ring), weight=positive_weight(ring))


def to_engine(f, space):
    return {space.encode(m): c for m, c in f.as_dict().items()}


def from_engine(d, ring, space):
    return Polynomial(ring, {space.exps(k): c for k, c in d.items()})


def _deadline(budget_seconds):
    return None if budget_seconds is None else time.monotonic() + budget_seconds


class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by increasing leading term."""

    def __init__(self, ring, order, elements, _engine_polys=None):
        self.ring = ring
        self.order = order
        self.elements = list(elements)
        self._space = term_space(ring, order)
        polys = _engine_polys or [to_engine(g, self._space) for g in self.elements]
        self._basis = engine.Basis(self._space)
        for p in polys:
            self._basis.add(p)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]}, order={self.order})"

    def leading_monomials(self):
        return [self._space.exps(k) for k in self._basis.leads]

    def contains_unit(self):
        return any(not any(e) for e in self.leading_monomials())

    def normal_form(self, f):
        if f.ring != self.ring:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        if not f:
            return f
        red = engine.reduce_poly(to_engine(f, self._space), self._basis)
        return from_engine(red, self.ring, self._space)

    def contains(self, f):
        return not self.normal_form(f)

    def s_polynomial(self, i, j):
        gi, gj = self.elements[i], self.elements[j]
        mi, _ = gi.leading_term(self.order)
        mj, _ = gj.leading_term(self.order)
        lcm = tuple(map(max, mi, mj))
        return (gi.mul_monomial(tuple(a - b for a, b in zip(lcm, mi)))
                - gj.mul_monomial(tuple(a - b for a, b in zip(lcm, mj))))

    def satisfies_buchberger_criterion(self):
        for i, j in itertools.combinations(range(len(self.elements)), 2):
            if self.normal_form(self.s_polynomial(i, j)):
                return False
        return True

    def is_reduced(self):
        leads = self.leading_monomials()
        for i, g in enumerate(self.elements):
            if g.leading_term(self.order)[1] != 1:
                return False
            for j, m in enumerate(leads):
                if i != j and any(all(a >= b for a, b in zip(t, m)) for t in g.monomials()):
                    return False
        return True


class Ideal:
    """Ideal generated by ``generators`` in ``ring``.

    Generators must be homogeneous for every component of the ring grading
    unless ``check=False``.
    """

    def __init__(self, ring, generators, check=True):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} not in {ring}")
            if g:
                if check and not g.is_homogeneous():
                    raise NotHomogeneousError(f"generator {g} is not homogeneous")
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    def __repr__(self):
        return f"Ideal({self.ring}, {[str(g) for g in self.generators]})"

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def groebner_basis(self, order=GREVLEX, budget_seconds=None):
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self, order, budget_seconds=budget_seconds)
            self._gb[order] = gb
        return gb

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return self.groebner_basis().contains_unit()

    def contains(self, f):
        if isinstance(f, str):
            f = self.ring.parse(f)
        return self.groebner_basis().contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return NotImplemented
        return ([str(g) for g in self.groebner_basis()]
                == [str(g) for g in other.groebner_basis()])

    __hash__ = object.__hash__

    def reduced(self):
        """The same ideal, generated by its reduced grevlex basis."""
        return Ideal(self.ring, self.groebner_basis().elements, check=False)

    def in_ring(self, ring):
        return Ideal(ring, [g.to_ring(ring) for g in self.generators], check=False)

    def minimal_generators(self):
        """A minimal homogeneous generating set (standard grading)."""
        gens = sorted(self.groebner_basis().elements + list(self.generators),
                      key=lambda g: g.total_degree)
        chosen = []
        for deg, group in itertools.groupby(gens, key=lambda g: g.total_degree):
            group = list(group)
            current = Ideal(self.ring, chosen, check=False)
            gb = current.groebner_basis() if chosen else None
            for g in group:
                if gb is not None and gb.contains(g):
                    continue
                chosen.append(g)
                gb = Ideal(self.ring, chosen, check=False).groebner_basis()
        return chosen


def buchberger(ideal, order=GREVLEX, budget_seconds=None, degree_bound=None):
    """Reduced Groebner basis of ``ideal`` under ``order``."""
    ring = ideal.ring
    space = term_space(ring, order)
    gens = [to_engine(g, space) for g in ideal.generators]
    polys = engine.buchberger(gens, space, deadline=_deadline(budget_seconds),
                              degree_bound=degree_bound)
    elements = [from_engine(p, ring, space) for p in polys]
    return GroebnerBasis(ring, order, elements, _engine_polys=polys)


def normal_form(f, gb):
    return gb.normal_form(f)


def eliminate(ideal, drop, budget_seconds=None):
    """Generators of ``ideal`` intersected with the subring without ``drop``.

    The result lives in the subring on the remaining variables.
    """
    ring = ideal.ring
    drop = list(drop)
    for v in drop:
        if v not in ring:
            raise UnknownVariableError(v)
    if not drop:
        return ideal
    keep = [v for v in ring.variables if v not in set(drop)]
    sub = ring.subring(keep)
    gb = buchberger(ideal, block_order(drop), budget_seconds=budget_seconds)
    idx = [ring.index(v) for v in drop]
    survivors = [g for g in gb if all(all(m[i] == 0 for i in idx) for m in g.monomials())]
    return Ideal(sub, [g.to_ring(sub) for g in survivors], check=False)


def colon_variable(ideal, name, infinite=False):
    """``I : x`` or ``I : x^oo`` for a homogeneous ideal, a variable ``x``."""
    ring = ideal.ring
    k = ring.index(name)
    gb = ideal.groebner_basis(grevlex_last(name))
    out = []
    for g in gb:
        order = min(m[k] for m in g.monomials())
        if not infinite:
            order = min(order, 1)
        if order:
            e = [0] * ring.nvars
            e[k] = order
            g = Polynomial(ring, {tuple(a - b for a, b in zip(m, e)): c for m, c in g.as_dict().items()})
        out.append(g)
    return Ideal(ring, out, check=False)


def is_nonzerodivisor_variable(ideal, name):
    """True when the variable ``name`` is a nonzerodivisor modulo ``ideal``."""
    k = ideal.ring.index(name)
    gb = ideal.groebner_basis(grevlex_last(name))
    return all(any(m[k] == 0 for m in g.monomials()) for g in gb)


def _fresh_names(count, avoid, stem):
    out = []
    i = 0
    while len(out) < count:
        name = f"{stem}{i}"
        if name not in avoid:
            out.append(name)
        i += 1
    return out


def ideal_quotient(I, J, budget_seconds=None):
    """``(I : J)`` computed from one module Groebner basis.

    Inside ``R^(k+1)`` take the submodule generated by ``(g_1, .., g_k, 1)``
    and ``f e_j`` for ``f`` in ``I``; its elements supported on the last
    position are exactly ``I : J``.
    """
    from .modules import FreeModule, module_groebner
    if I.ring != J.ring:
        raise RingMismatchError("ideals in different rings")
    ring = I.ring
    jg = list(J.generators)
    if not jg:
        return Ideal(ring, [ring.one], check=False)
    if any(g.is_constant() for g in jg):
        return I
    k = len(jg)
    shifts = [-g.total_degree for g in jg] + [0]
    F = FreeModule(ring, shifts)
    vectors = [list(jg) + [ring.one]]
    ig = list(I.groebner_basis()) if I.generators else []
    for j in range(k):
        for f in ig:
            v = [ring.zero] * (k + 1)
            v[j] = f
            vectors.append(v)
    gb = module_groebner(F, vectors, budget_seconds=budget_seconds)
    out = [v[k] for v in gb if all(not c for c in v[:k])]
    return Ideal(ring, out, check=False).reduced()


def saturate(I, J, budget_seconds=None):
    """``(I : J^oo)`` as the stable value of iterated quotients.

    When a variable of ``J`` is a nonzerodivisor modulo ``I`` the ideal is
    already saturated and returned unchanged.
    """
    ring = I.ring
    if any(g.is_constant() for g in J.generators):
        return I
    if not I.generators:
        return I
    for g in J.generators:
        names = g.used_variables()
        if len(g) == 1 and len(names) == 1 and g.total_degree == 1:
            if is_nonzerodivisor_variable(I, names[0]):
                return I
    current = I.reduced()
    while True:
        nxt = ideal_quotient(current, J, budget_seconds=budget_seconds)
        if nxt == current:
            return current
        current = nxt


def irrelevant_ideal(ring):
    return Ideal(ring, ring.gens(), check=False)


def kernel_of_ring_map(source_ring, images, budget_seconds=None):
    """Kernel of ``source_ring -> target``, ``y_i -> images[i]``.

    Images must be homogeneous in the target grading; each source variable then
    inherits the multidegree of its image (zero images inherit the common
    degree). The kernel is read off the graph ideal ``(y_i - f_i)`` by block
    elimination of the target variables.
    """
    images = list(images)
    if len(images) != source_ring.nvars:
        raise ValueError("one image per source variable is required")
    targets = {f.ring for f in images}
    if len(targets) != 1:
        raise RingMismatchError("images must share one target ring")
    target = targets.pop()
    degrees = []
    for f in images:
        if f:
            d = f.homogeneous_degree("all")
            if d is None:
                raise NotHomogeneousError(f"image {f} is not homogeneous")
            degrees.append(d)
        else:
            degrees.append(None)
    known = {d for d in degrees if d is not None}
    if source_ring.is_standard_graded() and len(known) > 1:
        raise NotHomogeneousError("inconsistent image degrees")
    if not known:
        return Ideal(source_ring, source_ring.gens(), check=False)
    common = next(iter(known)) if len(known) == 1 else None
    degrees = [d if d is not None else common for d in degrees]
    if any(d is None for d in degrees):
        raise NotHomogeneousError("cannot assign a degree to a zero image")

    clash = set(source_ring.variables) & set(target.variables)
    tnames = list(target.variables)
    if clash:
        tnames = _fresh_names(target.nvars, set(source_ring.variables), "_t")
    graph = PolyRing(tnames + list(source_ring.variables),
                     [list(row) + [d[k] for d in degrees]
                      for k, row in enumerate(target.grading)])
    tring = PolyRing(tnames, target.grading)
    gens = []
    for name, f in zip(source_ring.variables, images):
        moved = Polynomial(tring, f.as_dict()).to_ring(graph)
        gens.append(graph.var(name) - moved)
    elim = eliminate(Ideal(graph, gens, check=False), tnames, budget_seconds=budget_seconds)
    return Ideal(source_ring, [g.to_ring(source_ring) for g in elim.generators], check=False)


def ideal_from_strings(variables, generators):
    for v in variables:
        if not IDENTIFIER.match(v):
            raise ValueError(f"invalid variable name {v!r}")
    ring = PolyRing(variables)
    return Ideal(ring, [ring.parse(g) for g in generators])


__all__ = ["Ideal", "GroebnerBasis", "buchberger", "normal_form", "eliminate",
           "ideal_quotient", "saturate", "kernel_of_ring_map", "colon_variable",
           "is_nonzerodivisor_variable", "irrelevant_ideal", "MonomialOrder"]
