"""Dense univariate polynomials over QQ as coefficient lists, lowest degree first."""
from .coeffs import ONE, ZERO, to_qq


def trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def monic(p):
    p = trim(p)
    if not p:
        return p
    lc = p[-1]
    return [c / lc for c in p]


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO)
                 for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_(p, q):
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [to_qq(c) for c in trim(p)]
    quo = [ZERO] * max(len(r) - len(q) + 1, 0)
    lc = q[-1]
    while len(r) >= len(q):
        c = r[-1] / lc
        k = len(r) - len(q)
        quo[k] = c
        for i, b in enumerate(q):
            r[k + i] -= c * b
        r = trim(r)
    return trim(quo), r


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def derivative(p):
    return trim([c * i for i, c in enumerate(p)][1:])


def squarefree_decomposition(p):
    """Yun's algorithm: ``[(f1, 1), (f2, 2), ...]`` with ``p = lc * prod fi^i``."""
    p = monic(p)
    if degree(p) <= 0:
        return []
    out = []
    a = gcd(p, derivative(p))
    b = divmod_(p, a)[0]
    c = divmod_(derivative(p), a)[0]
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        b = divmod_(b, a)[0]
        c = divmod_(d, a)[0]
        if degree(a) > 0:
            out.append((monic(a), i))
        i += 1
        d = sub(c, derivative(b))
    return out


def inverse_mod(a, m):
    """Inverse of ``a`` modulo ``m``, or ``None`` when ``gcd(a, m) != 1``."""
    r0, r1 = trim(m), trim(divmod_(a, m)[1])
    s0, s1 = [], [ONE]
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub(s0, mul(quo, s1))
    if degree(r0) != 0:
        return None
    return [c / r0[0] for c in divmod_(s0, m)[1]]
