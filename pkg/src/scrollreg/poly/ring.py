"""Sparse multivariate polynomials with exact rational coefficients."""
import re
from functools import reduce
from itertools import repeat
from operator import add

from ..errors import NotHomogeneousError, RingMismatchError, UnknownVariableError
from .coeffs import ONE, ZERO, is_coefficient, qq_str, to_qq

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def grevlex_key(exps):
    """Sort key realising graded reverse lexicographic order."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class PolyRing:
    """Polynomial ring over QQ in named variables.

    ``grading`` is a sequence of weight vectors, one entry per variable. The
    default is the standard grading ``((1, ..., 1),)``.
    """

    __slots__ = ("variables", "grading", "_index", "_hash")

    def __init__(self, variables, grading=None):
        variables = tuple(variables)
        for name in variables:
            if not isinstance(name, str) or not IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        n = len(variables)
        if grading is None:
            grading = ((1,) * n,)
        grading = tuple(tuple(int(w) for w in row) for row in grading)
        if not grading:
            raise ValueError("a grading needs at least one weight vector")
        for row in grading:
            if len(row) != n:
                raise ValueError("every weight vector needs one entry per variable")
        self.variables = variables
        self.grading = grading
        self._index = {name: i for i, name in enumerate(variables)}
        self._hash = hash((variables, grading))

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name) from None

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.variables == other.variables
                and self.grading == other.grading)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.grading == ((1,) * self.nvars,):
            return f"PolyRing({list(self.variables)})"
        return f"PolyRing({list(self.variables)}, grading={[list(r) for r in self.grading]})"

    def is_standard_graded(self):
        return self.grading == ((1,) * self.nvars,)

    # constructors -------------------------------------------------------
    @property
    def zero(self):
        return Polynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = to_qq(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, coeff=1):
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.nvars or min(exps, default=0) < 0:
            raise ValueError(f"bad exponent vector {exps}")
        c = to_qq(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def from_dict(self, terms):
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(f"bad exponent vector {exps}")
            c = to_qq(c)
            if c:
                clean[exps] = clean.get(exps, ZERO) + c
        return Polynomial(self, {m: c for m, c in clean.items() if c})

    def var(self, name):
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): ONE})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def parse(self, text):
        from .parser import parse_polynomial
        return parse_polynomial(text, self)

    def __call__(self, text):
        return self.parse(text)

    # derived rings ------------------------------------------------------
    def extend(self, names, weights=None):
        """Ring with ``names`` appended; new weights default to 1 in each component."""
        names = tuple(names)
        if weights is None:
            weights = [(1,) * len(self.grading)] * len(names)
        grading = tuple(row + tuple(w[k] for w in weights)
                        for k, row in enumerate(self.grading))
        return PolyRing(self.variables + names, grading)

    def with_grading(self, grading):
        return PolyRing(self.variables, grading)

    def subring(self, names):
        """Ring on the listed variables (in this ring's order)."""
        keep = [i for i, v in enumerate(self.variables) if v in set(names)]
        missing = set(names) - set(self.variables)
        if missing:
            raise UnknownVariableError(sorted(missing)[0])
        return PolyRing([self.variables[i] for i in keep],
                        [[row[i] for i in keep] for row in self.grading])

    def degree_of(self, exps, component=0):
        w = self.grading[component]
        return sum(a * b for a, b in zip(w, exps))


class Polynomial:
    """Immutable polynomial; ``terms`` map exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # inspection ---------------------------------------------------------
    @property
    def terms(self):
        """Terms as ``(exponents, coefficient)`` in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def as_dict(self):
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return not self._terms or list(self._terms) == [(0,) * self.ring.nvars]

    def constant_term(self):
        return self._terms.get((0,) * self.ring.nvars, ZERO)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), ZERO)

    def monomials(self):
        return [m for m, _ in self.terms]

    @property
    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def used_variables(self):
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    def homogeneous_degree(self, component=0):
        """Common weighted degree of all terms, or ``None`` if inhomogeneous.

        ``component`` is an index into the ring's grading, or ``"all"`` for the
        full multidegree tuple.
        """
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        comps = range(len(self.ring.grading)) if component == "all" else [component]
        degrees = {tuple(self.ring.degree_of(m, k) for k in comps) for m in self._terms}
        if len(degrees) != 1:
            return None
        (deg,) = degrees
        return deg if component == "all" else deg[0]

    def is_homogeneous(self):
        return not self._terms or self.homogeneous_degree("all") is not None

    def multidegree(self):
        deg = self.homogeneous_degree("all")
        if deg is None:
            raise NotHomogeneousError(f"{self} is not homogeneous")
        return deg

    def leading_term(self, order=None):
        """``(exponents, coefficient)`` of the largest term under ``order``."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = grevlex_key if order is None else order.key_function(self.ring)
        m = max(self._terms, key=key)
        return m, self._terms[m]

    # arithmetic ---------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if is_coefficient(other):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            v = terms.get(m, ZERO) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c):
        c = to_qq(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if is_coefficient(other):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        terms = {}
        get = terms.get
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = tuple(map(add, m1, m2))
                terms[m] = get(m, ZERO) + c1 * c2
        return Polynomial(self.ring, {m: c for m, c in terms.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if is_coefficient(other):
            c = to_qq(other)
            if not c:
                raise ZeroDivisionError("division by zero")
            return self.scale(ONE / c)
        if isinstance(other, Polynomial) and other.is_constant() and other:
            return self.scale(ONE / other.constant_term())
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, exps, coeff=1):
        c = to_qq(coeff)
        return Polynomial(self.ring, {tuple(map(add, m, exps)): c * v
                                      for m, v in self._terms.items()} if c else {})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if is_coefficient(other):
            return self.is_constant() and self.constant_term() == to_qq(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # calculus and substitution -----------------------------------------
    def partial(self, name):
        i = self.ring.index(name)
        terms = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                terms[tuple(e)] = c * m[i]
        return Polynomial(self.ring, terms)

    def substitute(self, images, target=None):
        from .ops import substitute
        return substitute(self, images, target)

    def evaluate(self, point):
        """Evaluate at a sequence of values supporting ``+`` and ``*``."""
        point = list(point)
        total = ZERO
        for m, c in self._terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * x ** e
            total = total + value
        return total

    def to_ring(self, ring):
        """Reinterpret in ``ring`` by matching variable names."""
        pos = [ring.index(v) if v in ring else None for v in self.ring.variables]
        n = ring.nvars
        terms = {}
        for m, c in self._terms.items():
            e = [0] * n
            for v, (i, k) in enumerate(zip(pos, m)):
                if k:
                    if i is None:
                        raise UnknownVariableError(self.ring.variables[v])
                    e[i] = k
            terms[tuple(e)] = c
        return Polynomial(ring, terms)

    def monic(self, order=None):
        if not self._terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(ONE / c)

    # printing -----------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for m, c in self.terms:
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if not factors:
                body = qq_str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = qq_str(a) + "*" + "*".join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def poly_sum(polys, ring):
    return reduce(add, polys, ring.zero)


def zeros(n):
    return tuple(repeat(0, n))
