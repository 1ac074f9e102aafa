"""Buchberger kernel on order-encoded terms.

A term ``m * e_pos`` is stored as one flat integer tuple:
``prefix + A @ exps + suffix`` where ``A`` is the monomial-order matrix and
the prefix/suffix carry module position data. Native tuple comparison is
then the term order, multiplying by a monomial is elementwise addition, and
``max(poly)`` is the leading term. Polynomials are plain dicts
``{key: coefficient}``.
"""
import heapq
import time
from operator import add, sub

from ..errors import BudgetExceeded
from ..poly.coeffs import ONE, ZERO


class TermSpace:
    """Layout of encoded terms for one ring, order and module shape.

    ``pos_shift`` maps a position tuple to the degree of that free-module
    generator; ``weight`` is a positive grading used by the normal strategy.
    """

    def __init__(self, rows, prefix=0, suffix=0, weight=None, pos_shift=None):
        self.rows = [tuple(r) for r in rows]
        self.n = len(self.rows[0]) if self.rows else 0
        self.L = len(self.rows)
        self.P = prefix
        self.Q = suffix
        self.weight = tuple(weight) if weight is not None else (1,) * self.n
        self.pos_shift = pos_shift or {}
        dec = []
        for i in range(self.n):
            for r, row in enumerate(self.rows):
                if row[i] in (1, -1) and sum(1 for x in row if x) == 1:
                    dec.append((prefix + r, row[i]))
                    break
            else:
                raise ValueError("order matrix lacks a unit row for a variable")
        self.dec = dec
        self.cols = [tuple(row[i] for row in self.rows) for i in range(self.n)]
        self.is_ideal = prefix == 0 and suffix == 0

    def encode(self, exps, pos=()):
        mono = tuple(sum(a * e for a, e in zip(row, exps)) for row in self.rows)
        if self.is_ideal:
            return mono
        return tuple(pos[:self.P]) + mono + tuple(pos[self.P:])

    def mono(self, exps):
        """Multiplier key for a bare monomial (zero position data)."""
        return self.encode(exps, (0,) * (self.P + self.Q))

    def exps(self, key):
        return tuple(key[r] if s > 0 else -key[r] for r, s in self.dec)

    def pos(self, key):
        if self.is_ideal:
            return ()
        return key[:self.P] + key[self.P + self.L:]

    def degree(self, exps, pos=()):
        return sum(map(lambda a, b: a * b, self.weight, exps)) + self.pos_shift.get(pos, 0)


def mask_of(exps):
    m = 0
    for i, e in enumerate(exps):
        if e:
            m |= 1 << i
    return m


def mul_term(poly, qkey, c):
    return {tuple(map(add, k, qkey)): c * v for k, v in poly.items()}


class Basis:
    """Monic polynomials with cached leading data, indexed by position."""

    def __init__(self, space):
        self.space = space
        self.polys = []
        self.leads = []
        self.lexps = []
        self.lpos = []
        self.masks = []
        self.active = []
        self.by_pos = {}

    def add(self, poly):
        lead = max(poly)
        c = poly[lead]
        if c != 1:
            inv = ONE / c
            poly = {k: v * inv for k, v in poly.items()}
        e = self.space.exps(lead)
        p = self.space.pos(lead)
        idx = len(self.polys)
        self.polys.append(poly)
        self.leads.append(lead)
        self.lexps.append(e)
        self.lpos.append(p)
        self.masks.append(mask_of(e))
        self.active.append(True)
        self.by_pos.setdefault(p, []).append(idx)
        return idx

    def find_divisor(self, key, only_active=True):
        space = self.space
        cands = self.by_pos.get(space.pos(key))
        if not cands:
            return None
        te = space.exps(key)
        tm = mask_of(te)
        lexps, masks, active = self.lexps, self.masks, self.active
        for i in cands:
            if only_active and not active[i]:
                continue
            if masks[i] & ~tm:
                continue
            if all(map(int.__le__, lexps[i], te)):
                return i
        return None


def reduce_poly(poly, basis, full=True, deadline=None):
    """Normal form of ``poly`` (dict) modulo the monic ``basis``."""
    p = dict(poly)
    rem = {}
    polys, leads = basis.polys, basis.leads
    steps = 0
    while p:
        lt = max(p)
        c = p[lt]
        i = basis.find_divisor(lt)
        if i is None:
            if not full:
                p.update(rem)
                return p
            rem[lt] = c
            del p[lt]
            continue
        q = tuple(map(sub, lt, leads[i]))
        get = p.get
        for k, v in polys[i].items():
            nk = tuple(map(add, k, q))
            nv = get(nk, ZERO) - c * v
            if nv:
                p[nk] = nv
            else:
                del p[nk]
        steps += 1
        if deadline is not None and not steps & 63 and time.monotonic() > deadline:
            raise BudgetExceeded("Groebner computation exceeded its time budget")
    return rem


def _lcm_exps(a, b):
    return tuple(map(max, a, b))


def _divides(a, b):
    return all(map(int.__le__, a, b))


def buchberger(gens, space, deadline=None, degree_bound=None):
    """Reduced Groebner basis (list of monic dicts) of the span of ``gens``.

    Normal selection strategy with Gebauer-Moeller pair pruning; the product
    criterion is applied only for ideals, where it is valid.
    """
    basis = Basis(space)
    product_ok = space.is_ideal
    heap = []
    alive = set()
    counter = 0

    def pair_key(i, j):
        e = _lcm_exps(basis.lexps[i], basis.lexps[j])
        p = basis.lpos[i]
        return (space.degree(e, p), space.encode(e, p))

    def coprime(i, j):
        return product_ok and not (basis.masks[i] & basis.masks[j])

    def update(h):
        nonlocal counter
        eh = basis.lexps[h]
        ph = basis.lpos[h]
        same = [g for g in basis.by_pos.get(ph, []) if g != h and basis.active[g]]
        lcms = {g: _lcm_exps(eh, basis.lexps[g]) for g in same}
        kept = []
        pending = list(same)
        while pending:
            g = pending.pop()
            lg = lcms[g]
            if coprime(h, g) or (
                    not any(_divides(lcms[x], lg) for x in pending)
                    and not any(_divides(lcms[x], lg) for x in kept)):
                kept.append(g)
        new_pairs = [(g, h) for g in kept if not coprime(h, g)]
        for pair in list(alive):
            a, b = pair
            if basis.lpos[a] != ph:
                continue
            l12 = _lcm_exps(basis.lexps[a], basis.lexps[b])
            if (_divides(eh, l12) and _lcm_exps(basis.lexps[a], eh) != l12
                    and _lcm_exps(basis.lexps[b], eh) != l12):
                alive.discard(pair)
        for g in same:
            if _divides(eh, basis.lexps[g]):
                basis.active[g] = False
        for g, hh in new_pairs:
            pair = (min(g, hh), max(g, hh))
            alive.add(pair)
            counter += 1
            heapq.heappush(heap, (pair_key(*pair), counter, pair))

    pending_gens = []
    for f in gens:
        if f:
            lead = max(f)
            e, p = space.exps(lead), space.pos(lead)
            counter += 1
            pending_gens.append(((space.degree(e, p), lead), counter, f))
    pending_gens.sort(key=lambda t: (t[0], t[1]))
    pending_gens.reverse()

    while heap or pending_gens:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("Groebner computation exceeded its time budget")
        while heap and heap[0][2] not in alive:
            heapq.heappop(heap)
        take_gen = pending_gens and (not heap or pending_gens[-1][0][0] <= heap[0][0][0])
        if take_gen:
            key, _, f = pending_gens.pop()
            if degree_bound is not None and key[0] > degree_bound:
                continue
            h = reduce_poly(f, basis, deadline=deadline)
        else:
            if not heap:
                continue
            key, _, pair = heapq.heappop(heap)
            alive.discard(pair)
            if degree_bound is not None and key[0] > degree_bound:
                continue
            i, j = pair
            L = space.encode(_lcm_exps(basis.lexps[i], basis.lexps[j]), basis.lpos[i])
            s = mul_term(basis.polys[i], tuple(map(sub, L, basis.leads[i])), 1)
            get = s.get
            for k, v in basis.polys[j].items():
                nk = tuple(map(add, k, tuple(map(sub, L, basis.leads[j]))))
                nv = get(nk, ZERO) - v
                if nv:
                    s[nk] = nv
                else:
                    del s[nk]
            h = reduce_poly(s, basis, deadline=deadline) if s else {}
        if h:
            idx = basis.add(h)
            update(idx)

    return interreduce([basis.polys[i] for i in range(len(basis.polys)) if basis.active[i]],
                       space)


def interreduce(polys, space):
    """Reduced basis from a Groebner basis: drop redundant leads, reduce tails."""
    polys = sorted(polys, key=max)
    leads = [max(p) for p in polys]
    lex = [space.exps(k) for k in leads]
    lpos = [space.pos(k) for k in leads]
    keep = []
    for i in range(len(polys)):
        redundant = False
        for j in range(len(polys)):
            if i != j and lpos[i] == lpos[j] and _divides(lex[j], lex[i]):
                if lex[j] != lex[i] or j < i:
                    redundant = True
                    break
        if not redundant:
            keep.append(i)
    out = []
    for i in keep:
        others = Basis(space)
        for j in keep:
            if j != i:
                others.add(polys[j])
        head = leads[i]
        c = polys[i][head]
        tail = {k: v / c for k, v in polys[i].items() if k != head}
        red = reduce_poly(tail, others) if tail else {}
        red[head] = polys[i][head] / c
        out.append(red)
    out.sort(key=max)
    return out
