"""Bundle maps on the projective line and their cokernels.

A map ``alpha: O(-k1) + O(-k2) -> O + O + O(a_1) + ... + O(a_n)`` is a
``(n+2) x 2`` matrix of binary forms in ``s, t``. Its cokernel is a vector
bundle ``O(b_1) + ... + O(b_n)`` when the 2x2 minors have no common factor.
The splitting type is read off the kernel of the transpose, a free
``k[s,t]``-module with generators in degrees ``b_i``.
"""
import random
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, lcm

from ..errors import DegenerateInputError
from ..poly import QQ, PolyRing, binary_form_gcd
from ..resolution import GradedMatrix, syzygy_matrix

BINARY = PolyRing(["s", "t"])


def binary_forms_of_degree(degree):
    """Monomials ``s^(degree-j) t^j``, ``j = 0..degree``."""
    return [BINARY.monomial((degree - j, j)) for j in range(degree + 1)]


class BundleMapAlpha:
    """The matrix of ``alpha`` with rows of twists ``0, 0, a_1..a_n``."""

    def __init__(self, entries, a, k1, k2, check=True):
        self.a = tuple(int(x) for x in a)
        self.k1, self.k2 = int(k1), int(k2)
        rows = []
        for row in entries:
            rows.append(tuple(BINARY.parse(f) if isinstance(f, str) else f for f in row))
        self.entries = tuple(rows)
        if len(self.entries) != len(self.a) + 2 or any(len(r) != 2 for r in self.entries):
            raise ValueError(f"alpha must be a {len(self.a) + 2}x2 matrix")
        if check:
            self.check_degrees()

    @property
    def n(self):
        return len(self.a)

    @property
    def row_twists(self):
        return (0, 0) + self.a

    @property
    def column_degrees(self):
        return (self.k1, self.k2)

    def check_degrees(self):
        for i, (e, row) in enumerate(zip(self.row_twists, self.entries)):
            for j, (k, f) in enumerate(zip(self.column_degrees, row)):
                if f.ring != BINARY:
                    raise ValueError(f"alpha[{i}][{j}] is not a form in s, t")
                if f and f.homogeneous_degree(0) != e + k:
                    raise ValueError(
                        f"alpha[{i}][{j}] = {f} should be a form of degree {e + k}")

    def minors(self):
        out = []
        for i, j in combinations(range(len(self.entries)), 2):
            (p, q), (u, v) = self.entries[i], self.entries[j]
            out.append(p * v - q * u)
        return out

    def minors_gcd(self):
        """Monic gcd of the 2x2 minors, or ``None`` if they all vanish."""
        minors = [m for m in self.minors() if m]
        return binary_form_gcd(minors) if minors else None

    def is_fiberwise_injective(self):
        g = self.minors_gcd()
        return g is not None and g.is_constant()

    def transpose_matrix(self):
        """``alpha^T`` as a graded map ``S^2 + (+) S(-a_i) -> S(k1) + S(k2)``."""
        rows = [[self.entries[i][j] for i in range(len(self.entries))] for j in range(2)]
        return GradedMatrix(BINARY, rows, [-self.k1, -self.k2], list(self.row_twists))

    def to_json(self):
        return [[str(f) for f in row] for row in self.entries]

    def __eq__(self, other):
        return (isinstance(other, BundleMapAlpha) and self.a == other.a
                and self.column_degrees == other.column_degrees
                and self.entries == other.entries)

    __hash__ = None

    def __repr__(self):
        return f"BundleMapAlpha({self.to_json()})"


@dataclass
class ScrollSpec:
    """Input of the construction: ``n``, twists ``a``, degrees ``k1, k2`` and alpha."""
    n: int
    a: tuple
    k1: int
    k2: int
    alpha: BundleMapAlpha = None
    seed: int = None
    coeff_bound: int = 5
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.a = tuple(int(x) for x in self.a)
        self.validate()
        if self.alpha is None:
            if self.seed is None:
                raise ValueError("a spec needs either alpha or a seed")
            self.alpha = random_alpha(self.n, self.a, self.k1, self.k2, self.seed,
                                      self.coeff_bound)
        elif not isinstance(self.alpha, BundleMapAlpha):
            self.alpha = BundleMapAlpha(self.alpha, self.a, self.k1, self.k2)
        if self.alpha.a != self.a or self.alpha.column_degrees != (self.k1, self.k2):
            raise ValueError("alpha does not match the spec's degrees")

    def validate(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if len(self.a) != self.n:
            raise ValueError("a must have n entries")
        if any(x < 1 for x in self.a):
            raise ValueError("the twists a_i must be positive")
        if list(self.a) != sorted(self.a):
            raise ValueError("the twists a_i must be nondecreasing")
        if self.k1 < 1 or self.k2 < 1:
            raise ValueError("k1 and k2 must be positive")
        if self.coeff_bound is not None and self.coeff_bound < 1:
            raise ValueError("coeff_bound must be positive")

    @property
    def d(self):
        return sum(self.a) + self.k1 + self.k2

    @property
    def r(self):
        return self.n + 1 + sum(self.a)

    @property
    def expected_secant_length(self):
        return self.d - self.r + self.n + 1

    @classmethod
    def from_json(cls, data):
        keys = set(data)
        if ("alpha" in keys) == ("seed" in keys):
            raise ValueError('exactly one of "alpha" and "seed" must be given')
        for k in ("n", "a", "k1", "k2"):
            if k not in keys:
                raise ValueError(f"missing field {k!r}")
        unknown = keys - {"n", "a", "k1", "k2", "alpha", "seed", "coeff_bound"}
        if unknown:
            raise ValueError(f"unknown fields {sorted(unknown)}")

        def integer(name, value):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer")
            return value
        n = integer("n", data["n"])
        a = [integer("a", x) for x in data["a"]]
        k1, k2 = integer("k1", data["k1"]), integer("k2", data["k2"])
        if "alpha" in data:
            alpha = data["alpha"]
            if not isinstance(alpha, list) or not all(isinstance(r, list) for r in alpha):
                raise ValueError("alpha must be a list of rows")
            if not all(isinstance(f, str) for r in alpha for f in r):
                raise ValueError("alpha entries must be polynomial strings")
            return cls(n, a, k1, k2, alpha=BundleMapAlpha(alpha, a, k1, k2))
        bound = integer("coeff_bound", data.get("coeff_bound", 5))
        return cls(n, a, k1, k2, seed=integer("seed", data["seed"]), coeff_bound=bound)

    def to_json(self):
        out = {"n": self.n, "a": list(self.a), "k1": self.k1, "k2": self.k2,
               "d": self.d, "r": self.r, "alpha": self.alpha.to_json()}
        if self.seed is not None:
            out["seed"] = self.seed
            out["coeff_bound"] = self.coeff_bound
        return out


def random_alpha(n, a, k1, k2, seed, coefficient_bound=5, retries=20):
    """Seeded integer alpha with the right degrees and fiberwise rank 2."""
    a = tuple(a)
    if len(a) != n:
        raise ValueError("a must have n entries")
    rng = random.Random(seed)
    twists = (0, 0) + a
    for _ in range(retries):
        rows = []
        for e in twists:
            row = []
            for k in (k1, k2):
                terms = {(e + k - j, j): rng.randint(-coefficient_bound, coefficient_bound)
                         for j in range(e + k + 1)}
                row.append(BINARY.from_dict(terms))
            rows.append(row)
        alpha = BundleMapAlpha(rows, a, k1, k2)
        if alpha.is_fiberwise_injective():
            return alpha
    raise DegenerateInputError(
        f"no fiberwise injective alpha found in {retries} draws (seed {seed})")


def _kernel_of_transpose(alpha):
    if not alpha.is_fiberwise_injective():
        raise DegenerateInputError("alpha not fiberwise injective")
    K = syzygy_matrix(alpha.transpose_matrix())
    if K.ncols != alpha.n:
        raise DegenerateInputError(
            f"kernel of alpha^T has {K.ncols} generators, expected {alpha.n}")
    b = list(K.column_degrees)
    if any(x <= 0 for x in b):
        raise DegenerateInputError(f"cokernel has a trivial summand (b = {sorted(b)})")
    d = sum(alpha.a) + alpha.k1 + alpha.k2
    if sum(b) != d:
        raise DegenerateInputError(f"splitting type {sorted(b)} does not sum to d = {d}")
    return K


def splitting_type(alpha):
    """Sorted ``b`` with ``coker(alpha) = O(b_1) + ... + O(b_n)``."""
    return sorted(_kernel_of_transpose(alpha).column_degrees)


def cokernel_map(alpha):
    """``(beta, b)``: the ``n x (n+2)`` cokernel matrix and the twists ``b``.

    Row ``i`` of ``beta`` is a kernel generator of ``alpha^T`` of degree
    ``b_i``; its entry in column ``c`` is a form of degree ``b_i - twist_c``,
    and ``beta * alpha = 0``.
    """
    K = _kernel_of_transpose(alpha)
    return [_primitive(col) for col in K.columns()], list(K.column_degrees)


def _primitive(forms):
    """Scale a list of forms to coprime integer coefficients (keeps Groebner steps small)."""
    coeffs = [c for f in forms for _, c in f.as_dict().items()]
    if not coeffs:
        return list(forms)
    den = 1
    for c in coeffs:
        den = lcm(den, int(c.denominator))
    num = 0
    for c in coeffs:
        num = gcd(num, int(c * den))
    factor = QQ(den, num)
    if coeffs[0] * factor < 0:
        factor = -factor
    return [f.scale(factor) for f in forms]


def compose(beta, alpha):
    """The product ``beta * alpha`` as a list of rows."""
    out = []
    for row in beta:
        vals = []
        for j in range(2):
            acc = BINARY.zero
            for f, arow in zip(row, alpha.entries):
                if f and arow[j]:
                    acc = acc + f * arow[j]
            vals.append(acc)
        out.append(vals)
    return out


__all__ = ["BINARY", "BundleMapAlpha", "ScrollSpec", "random_alpha", "splitting_type",
           "cokernel_map", "compose", "binary_forms_of_degree"]
