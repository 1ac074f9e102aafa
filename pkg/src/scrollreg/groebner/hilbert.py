"""Hilbert series of R/I from the lead-term ideal."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def _minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=200000)
def _numerator(gens):
    """Numerator ``N(T)`` with ``HS(R/(gens)) = N(T) / (1 - T)^n``."""
    if not gens:
        return (1,)
    if any(sum(m) == 0 for m in gens):
        return (0,)
    if all(sum(1 for e in m if e) == 1 for m in gens):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(_trim(out))
    n = len(gens[0])
    # pivot on a variable of a mixed generator; x^e is then not already in I
    mixed = [m for m in gens if sum(1 for v in m if v) > 1]
    counts = [sum(1 for m in mixed if m[i]) for i in range(n)]
    x = max(range(n), key=lambda i: (counts[i], -i))
    e = min(m[x] for m in mixed if m[x])
    # I + (x^e)
    p = [0] * n
    p[x] = e
    plus = _minimalize(list(gens) + [tuple(p)])
    # I : x^e
    colon = _minimalize([tuple(max(a - (e if i == x else 0), 0) for i, a in enumerate(m))
                         for m in gens])
    a = _numerator(plus)
    b = _numerator(colon)
    return tuple(_trim(_poly_add(list(a), [0] * e + list(b))))


def hilbert_numerator(lead_monomials, nvars):
    if not lead_monomials:
        return [1]
    return list(_numerator(_minimalize(lead_monomials)))


def _divide_one_minus_t(p):
    """Return ``p / (1 - T)`` when exact, else ``None``."""
    if sum(p) != 0:
        return None
    q = []
    acc = 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    return _trim(q) if q else [0]


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple          # coefficients of N(T), lowest degree first
    nvars: int
    krull_dimension: int
    degree: int
    hilbert_polynomial: tuple  # Fractions, coefficients in m, lowest first
    reduced_numerator: tuple   # Q(T) = N(T) / (1 - T)^(nvars - krull_dimension)

    @property
    def is_empty(self):
        return self.krull_dimension <= 0

    @property
    def projective_dimension(self):
        # the empty scheme has dimension -1, also when R/I is the zero ring
        return max(self.krull_dimension - 1, -1)

    def hilbert_function(self, m):
        """``dim (R/I)_m``."""
        D = self.krull_dimension
        if D < 0:
            return 0
        q = self.reduced_numerator
        if D == 0:
            return q[m] if 0 <= m < len(q) else 0
        return sum(c * comb(m - k + D - 1, D - 1) for k, c in enumerate(q) if m - k >= 0)

    def hilbert_polynomial_value(self, m):
        return sum(c * m ** i for i, c in enumerate(self.hilbert_polynomial))

    def to_json(self):
        return {
            "numerator": list(self.numerator),
            "krull_dimension": self.krull_dimension,
            "projective_dimension": self.projective_dimension,
            "degree": self.degree,
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial],
        }


def _binomial_poly(shift, D):
    """Coefficients (in m) of ``C(m - shift + D - 1, D - 1)``."""
    poly = [Fraction(1)]
    for i in range(1, D):
        # multiply by (m - shift + i)
        c0 = Fraction(i - shift)
        new = [Fraction(0)] * (len(poly) + 1)
        for j, a in enumerate(poly):
            new[j] += a * c0
            new[j + 1] += a
        poly = new
    f = factorial(D - 1)
    return [a / f for a in poly]


def hilbert_data_from_leads(lead_monomials, nvars):
    N = hilbert_numerator(lead_monomials, nvars)
    if not any(N):
        return HilbertData(tuple(N), nvars, -1, 0, (), (0,))
    q = list(N)
    c = 0
    while True:
        nxt = _divide_one_minus_t(q)
        if nxt is None:
            break
        q = nxt
        c += 1
    D = nvars - c
    deg = sum(q)
    hp = [Fraction(0)] * max(D, 1)
    if D > 0:
        for k, coef in enumerate(q):
            for i, a in enumerate(_binomial_poly(k, D)):
                hp[i] += coef * a
    while len(hp) > 1 and hp[-1] == 0:
        hp.pop()
    if D == 0:
        hp = [Fraction(0)]
    return HilbertData(tuple(N), nvars, D, deg, tuple(hp), tuple(q))


def hilbert_data(ideal):
    """Hilbert series numerator, Krull dimension, degree and Hilbert polynomial of R/I."""
    gb = ideal.groebner_basis()
    return hilbert_data_from_leads(gb.leading_monomials(), ideal.ring.nvars)


def hilbert_function_value(ideal, m):
    return hilbert_data(ideal).hilbert_function(m)
