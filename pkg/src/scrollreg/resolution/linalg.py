"""Exact sparse linear algebra over QQ, used for graded-piece rank counts."""
from ..poly.coeffs import ONE, ZERO, to_qq


def rank(rows):
    """Rank of a matrix given as a list of sparse rows ``{column: value}``."""
    return len(echelon(rows))


def echelon(rows):
    """Row echelon form as ``{pivot_column: row}`` with unit pivots."""
    pivots = {}
    for r in rows:
        r = {k: to_qq(v) for k, v in r.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = ONE / r[c]
                pivots[c] = {k: v * inv for k, v in r.items()}
                break
            f = r[c]
            for k, v in p.items():
                nv = r.get(k, ZERO) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return pivots


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` for ``A`` given by sparse rows."""
    piv = echelon(rows)
    # back-substitute to reduced form
    cols = sorted(piv, reverse=True)
    for c in cols:
        row = piv[c]
        for c2 in cols:
            if c2 < c and c in piv[c2]:
                f = piv[c2][c]
                r2 = piv[c2]
                for k, v in row.items():
                    nv = r2.get(k, ZERO) - f * v
                    if nv:
                        r2[k] = nv
                    else:
                        r2.pop(k, None)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for j in free:
        vec = {j: ONE}
        for c, row in piv.items():
            v = row.get(j)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


def monomials_of_degree(nvars, degree):
    """Exponent tuples of total ``degree``, in a fixed deterministic order."""
    if degree < 0:
        return []
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            rec(prefix + (e,), left - e, slots - 1)
    rec((), degree, nvars)
    return out
