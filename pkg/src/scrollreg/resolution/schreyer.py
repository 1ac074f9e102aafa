"""Schreyer frames: free resolutions from a Groebner basis by S-pair syzygies.

Level ``k`` generators are vectors in the level ``k-1`` free module. A term
``m * E_a`` is encoded as ``A @ (m + T_a) + chain_a`` where ``T_a`` is the
total lead monomial of ``E_a`` pushed down to the ring and ``chain_a`` lists
negated indices along the lead-component path; plain tuple comparison is then
the induced Schreyer order, and the S-pair syzygies of a level form a
Groebner basis of the next kernel.
"""
import time
from operator import add, sub

from ..errors import BudgetExceeded
from ..groebner import engine
from ..groebner.ideal import positive_weight
from ..poly import GREVLEX, Polynomial
from ..poly.coeffs import ONE, ZERO
from .matrix import GradedMatrix


class _Gen:
    __slots__ = ("comp", "mono", "total", "chain", "vector", "degree")

    def __init__(self, comp, mono, total, chain, vector, degree):
        self.comp = comp
        self.mono = mono
        self.total = total
        self.chain = chain
        self.vector = vector
        self.degree = degree


def _divide(p, basis, deadline=None):
    """Quotients ``[(exps, index, coeff)]`` and remainder of ``p`` by ``basis``."""
    p = dict(p)
    quotients = []
    rem = {}
    space = basis.space
    steps = 0
    while p:
        lt = max(p)
        c = p[lt]
        i = basis.find_divisor(lt, only_active=False)
        if i is None:
            rem[lt] = c
            del p[lt]
            continue
        q = tuple(map(sub, lt, basis.leads[i]))
        quotients.append((space.exps(lt), i, c))
        get = p.get
        for k, v in basis.polys[i].items():
            nk = tuple(map(add, k, q))
            nv = get(nk, ZERO) - c * v
            if nv:
                p[nk] = nv
            else:
                del p[nk]
        steps += 1
        if deadline is not None and not steps & 255 and time.monotonic() > deadline:
            raise BudgetExceeded("resolution exceeded its time budget")
    return quotients, rem


class SchreyerFrame:
    """Levels of generators; ``levels[0]`` is the ring itself."""

    def __init__(self, ring, gb, order=GREVLEX, max_levels=None, budget_seconds=None):
        self.ring = ring
        self.order = order
        self.rows = order.matrix(ring)
        self.weight = positive_weight(ring)
        n = ring.nvars
        zero = (0,) * n
        deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
        base = _Gen(None, zero, zero, (), None, 0)
        self.levels = [[base]]
        space0 = engine.TermSpace(self.rows)
        gens = []
        for g in gb:
            enc = {space0.encode(m): c for m, c in g.as_dict().items()}
            lead = max(enc)
            lc = enc[lead]
            vec = {k: v / lc for k, v in enc.items()}
            m = space0.exps(lead)
            gens.append((m, vec))
        gens.sort(key=lambda t: t[0], reverse=True)
        level1 = []
        for idx, (m, vec) in enumerate(gens):
            level1.append(_Gen(0, m, m, (-idx,), vec, sum(m)))
        if level1:
            self.levels.append(level1)
        limit = max_levels if max_levels is not None else 2 * n + 2
        while len(self.levels) <= limit and self.levels[-1]:
            nxt = self._next_level(deadline)
            if not nxt:
                break
            self.levels.append(nxt)

    def _space(self, k):
        """Encoding of the level ``k`` free module (chains of length ``k``)."""
        return engine.TermSpace(self.rows, suffix=k, weight=self.weight)

    def _next_level(self, deadline):
        k = len(self.levels) - 1          # current top level
        cur = self.levels[k]
        space_prev = self._space(k - 1)   # where level-k vectors live
        basis = engine.Basis(space_prev)
        for g in cur:
            basis.add(g.vector)
        by_comp = {}
        for a, g in enumerate(cur):
            by_comp.setdefault(g.comp, []).append(a)
        pairs = []
        for comp, idxs in by_comp.items():
            for pos, a in enumerate(idxs):
                ma = cur[a].mono
                cands = []
                for b in idxs[pos + 1:]:
                    q = tuple(max(x, y) - x for x, y in zip(ma, cur[b].mono))
                    cands.append((q, b))
                kept = []
                for q, b in sorted(cands, key=lambda t: (sum(t[0]), t[1])):
                    if not any(all(x <= y for x, y in zip(q2, q)) for q2, _ in kept):
                        kept.append((q, b))
                for q, b in kept:
                    pairs.append((a, q, b))
        if not pairs:
            return []
        pairs.sort(key=lambda t: (t[0], tuple(-x for x in t[1])))
        space_cur = self._space(k)
        out = []
        for new_idx, (a, q, b) in enumerate(pairs):
            ga, gb_ = cur[a], cur[b]
            lcm = tuple(x + y for x, y in zip(q, ga.mono))
            r = tuple(x - y for x, y in zip(lcm, gb_.mono))
            qa = space_prev.mono(q)
            rb = space_prev.mono(r)
            s = {tuple(map(add, key, qa)): c for key, c in ga.vector.items()}
            get = s.get
            for key, c in gb_.vector.items():
                nk = tuple(map(add, key, rb))
                nv = get(nk, ZERO) - c
                if nv:
                    s[nk] = nv
                else:
                    del s[nk]
            quotients, rem = _divide(s, basis, deadline)
            if rem:
                raise ArithmeticError("Schreyer syzygy did not reduce to zero")
            vec = {}
            vec[space_cur.encode(tuple(x + y for x, y in zip(q, ga.total)), ga.chain)] = ONE
            key_b = space_cur.encode(tuple(x + y for x, y in zip(r, gb_.total)), gb_.chain)
            vec[key_b] = vec.get(key_b, ZERO) - ONE
            for total_exps, x, c in quotients:
                gx = cur[x]
                key = space_cur.encode(total_exps, gx.chain)
                nv = vec.get(key, ZERO) - c
                if nv:
                    vec[key] = nv
                else:
                    vec.pop(key, None)
            total = tuple(x + y for x, y in zip(q, ga.total))
            out.append(_Gen(a, q, total, ga.chain + (-new_idx,), vec, sum(total)))
        return out

    def ranks(self):
        return [len(level) for level in self.levels[1:]]

    def differential(self, k):
        """Matrix of level ``k`` generators in terms of level ``k - 1``."""
        ring = self.ring
        prev, cur = self.levels[k - 1], self.levels[k]
        space = self._space(k - 1)
        L = len(self.rows)
        index_of = {g.chain: i for i, g in enumerate(prev)}
        cols = []
        for g in cur:
            comps = {}
            for key, c in g.vector.items():
                chain = key[L:]
                i = index_of[chain]
                exps = space.exps(key)
                mono = tuple(x - y for x, y in zip(exps, prev[i].total))
                comps.setdefault(i, {})[mono] = c
            col = [Polynomial(ring, comps[i]) if i in comps else ring.zero
                   for i in range(len(prev))]
            cols.append(col)
        return GradedMatrix.from_columns(ring, cols, [p.degree for p in prev],
                                         [g.degree for g in cur], check=False)

    def differentials(self):
        return [self.differential(k) for k in range(1, len(self.levels))]
