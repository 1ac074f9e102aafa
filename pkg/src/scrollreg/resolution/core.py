"""Resolutions, minimization, Betti tables and regularity."""
from collections import Counter

from ..errors import NotHomogeneousError, NotMinimalError
from ..groebner import hilbert_data
from ..poly import GREVLEX
from .linalg import monomials_of_degree, rank
from .matrix import GradedMatrix, syzygy_matrix
from .schreyer import SchreyerFrame


class Resolution:
    """Differentials ``d_1, d_2, ...`` of a graded free resolution of an ideal.

    ``d_1`` maps the generators of the ideal into the ring (one row of degree
    0); the columns of ``d_{i+1}`` are the generators of the ``i``-th free
    module, which is the homological index used by Betti tables.
    """

    def __init__(self, ring, differentials, ideal=None):
        self.ring = ring
        self.differentials = list(differentials)
        self.ideal = ideal

    def __len__(self):
        return len(self.differentials)

    def __repr__(self):
        return f"Resolution(ranks={self.ranks()})"

    @property
    def length(self):
        return len(self.differentials)

    def ranks(self):
        return [d.ncols for d in self.differentials]

    def degrees(self, i):
        """Generator degrees of the ``i``-th free module."""
        return list(self.differentials[i].column_degrees)

    def is_minimal(self):
        return not any(d.has_unit_entry() for d in self.differentials[1:])


def _standard_graded(ideal):
    if not ideal.ring.is_standard_graded():
        raise NotHomogeneousError("resolutions are computed for the standard grading")


def _trim(differentials):
    while differentials and differentials[-1].ncols == 0:
        differentials.pop()
    return differentials


def schreyer_resolution(ideal, budget_seconds=None, order=GREVLEX):
    """Frame resolution from a reduced Groebner basis (usually not minimal)."""
    _standard_graded(ideal)
    ring = ideal.ring
    if ideal.is_zero():
        return Resolution(ring, [], ideal)
    gb = ideal.groebner_basis(order, budget_seconds=budget_seconds)
    frame = SchreyerFrame(ring, list(gb), order=order, budget_seconds=budget_seconds)
    return Resolution(ring, _trim(frame.differentials()), ideal)


def iterated_resolution(ideal, budget_seconds=None):
    """Resolution by repeated minimal syzygy computations from minimal generators."""
    _standard_graded(ideal)
    ring = ideal.ring
    if ideal.is_zero():
        return Resolution(ring, [], ideal)
    gens = sorted(ideal.minimal_generators(), key=lambda g: g.total_degree)
    d = GradedMatrix(ring, [gens], [0], [g.total_degree for g in gens])
    diffs = [d]
    while d.ncols and len(diffs) <= ring.nvars + 1:
        d = syzygy_matrix(d, budget_seconds=budget_seconds)
        if d.ncols == 0:
            break
        diffs.append(d)
    return Resolution(ring, diffs, ideal)


def free_resolution(ideal, method="schreyer", budget_seconds=None, order=GREVLEX):
    """A finite graded free resolution of ``ideal``.

    ``method="schreyer"`` builds the frame from a Groebner basis for
    ``order``; ``method="iterated"`` takes minimal syzygies step by step.
    """
    if method == "schreyer":
        return schreyer_resolution(ideal, budget_seconds, order)
    if method == "iterated":
        return iterated_resolution(ideal, budget_seconds)
    raise ValueError(f"unknown resolution method {method!r}")


def _is_unit(f):
    return bool(f) and f.is_constant()


def minimize(res):
    """Cancel unit entries until none remain.

    Pivots on the leftmost-uppermost unit of each differential, repeating to a
    fixpoint. Cancelling a unit ``u = d_k[p, q]`` subtracts
    ``d_k[i, q] * d_k[p, j] / u`` from every other entry and deletes row ``p``,
    column ``q`` of ``d_k``, column ``p`` of ``d_(k-1)`` and row ``q`` of
    ``d_(k+1)``. The first differential is left alone: its target is the ring.
    """
    ring = res.ring
    n = len(res.differentials)
    # sparse columns: cols[k][q] = {p: entry}
    cols = []
    rowdeg = []
    coldeg = []
    for d in res.differentials:
        cs = {}
        for j in range(d.ncols):
            cs[j] = {i: d.entries[i][j] for i in range(d.nrows) if d.entries[i][j]}
        cols.append(cs)
        rowdeg.append(list(d.row_degrees))
        coldeg.append(list(d.column_degrees))
    alive_rows = [set(range(d.nrows)) for d in res.differentials]

    for k in range(1, n):
        D = cols[k]
        while True:
            hit = None
            for q in sorted(D):
                col = D[q]
                for p in sorted(col):
                    if _is_unit(col[p]):
                        hit = (p, q)
                        break
                if hit:
                    break
            if hit is None:
                break
            p, q = hit
            pivot_col = D.pop(q)
            u = pivot_col.pop(p)
            for j, col in D.items():
                a_pj = col.pop(p, None)
                if a_pj is None:
                    continue
                factor = a_pj / u.constant_term()
                for i, a_iq in pivot_col.items():
                    v = col.get(i)
                    nv = (v - a_iq * factor) if v is not None else -(a_iq * factor)
                    if nv:
                        col[i] = nv
                    else:
                        col.pop(i, None)
            alive_rows[k].discard(p)
            cols[k - 1].pop(p, None)
            if k + 1 < n:
                alive_rows[k + 1].discard(q)
                for col in cols[k + 1].values():
                    col.pop(q, None)

    diffs = []
    for k in range(n):
        rows = sorted(alive_rows[k])
        rindex = {r: t for t, r in enumerate(rows)}
        qs = sorted(cols[k])
        entries = [[ring.zero] * len(qs) for _ in rows]
        for t, q in enumerate(qs):
            for p, f in cols[k][q].items():
                entries[rindex[p]][t] = f
        diffs.append(GradedMatrix(ring, entries, [rowdeg[k][r] for r in rows],
                                  [coldeg[k][q] for q in qs], check=False))
    return Resolution(ring, _trim(diffs), res.ideal)


def minimal_resolution(ideal, method="schreyer", budget_seconds=None, order=GREVLEX):
    return minimize(free_resolution(ideal, method, budget_seconds, order))


class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of a minimal resolution of an ideal.

    Index ``i = 0`` counts minimal generators. A table with no entries comes
    from the zero ideal and is flagged ``empty``.
    """

    def __init__(self, entries):
        self.entries = {(int(i), int(j)): int(b) for (i, j), b in dict(entries).items() if b}

    @property
    def empty(self):
        return not self.entries

    def __getitem__(self, ij):
        return self.entries.get(tuple(ij), 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    __hash__ = None

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.entries.items()))})"

    @property
    def length(self):
        return max((i for i, _ in self.entries), default=-1) + 1

    def totals(self):
        out = [0] * self.length
        for (i, _), b in self.entries.items():
            out[i] += b
        return out

    def to_json(self):
        return {"entries": [{"i": i, "j": j, "beta": b}
                            for (i, j), b in sorted(self.entries.items())]}

    @classmethod
    def from_json(cls, data):
        return cls({(e["i"], e["j"]): e["beta"] for e in data["entries"]})

    def to_text(self):
        """Grid with columns ``i`` and rows ``j - i``; zeros are printed as ``.``."""
        if self.empty:
            return "(empty)"
        ncol = self.length
        shifts = sorted({j - i for i, j in self.entries})
        rows = list(range(shifts[0], shifts[-1] + 1))
        cells = [[str(self[i, r + i]) if self[i, r + i] else "." for i in range(ncol)]
                 for r in rows]
        totals = [str(t) for t in self.totals()]
        width = max(len(c) for c in [str(ncol - 1)] + totals + [c for row in cells for c in row])
        label = max(len("total"), max(len(str(r)) for r in rows))

        def line(head, items):
            return f"{head:>{label}}: " + " ".join(f"{x:>{width}}" for x in items)
        out = [" " * (label + 2) + " ".join(f"{i:>{width}}" for i in range(ncol)),
               line("total", totals)]
        out += [line(str(r), row) for r, row in zip(rows, cells)]
        return "\n".join(out)


def betti_table(res):
    """Betti table of a minimal resolution; non-minimal input is rejected."""
    if not res.is_minimal():
        raise NotMinimalError("resolution has unit entries; minimize it first")
    counts = Counter()
    for i, d in enumerate(res.differentials):
        for j in d.column_degrees:
            counts[i, j] += 1
    return BettiTable(counts)


def regularity(table):
    """``max(j - i)`` over the nonzero entries; 0 for the empty table (see ``empty``)."""
    if table.empty:
        return 0
    return max(j - i for i, j in table.entries)


def _constant_block_rank(d, degree):
    rows = [i for i, r in enumerate(d.row_degrees) if r == degree]
    cols = [j for j, c in enumerate(d.column_degrees) if c == degree]
    if not rows or not cols:
        return 0
    mat = []
    for i in rows:
        mat.append({t: d.entries[i][j].constant_term() for t, j in enumerate(cols)
                    if d.entries[i][j]})
    return rank(mat)


def frame_betti_table(res):
    """Betti numbers of any resolution from the ranks of its constant blocks.

    Tensoring with the residue field leaves only degree-zero entries, so
    ``beta[i, j] = f[i, j] - rank(c_i)_j - rank(c_(i+1))_j`` with ``c_k`` the
    constant part of ``d_(k+1)`` between generators of degree ``j``.
    """
    ds = res.differentials
    counts = Counter()
    for i, d in enumerate(ds):
        for j in set(d.column_degrees):
            f = d.column_degrees.count(j)
            lower = _constant_block_rank(d, j) if i > 0 else 0
            upper = _constant_block_rank(ds[i + 1], j) if i + 1 < len(ds) else 0
            counts[i, j] = f - lower - upper
    return BettiTable(counts)


def _graded_matrix_piece(d, degree, nvars):
    """Sparse rows (one per column basis element) of ``d`` in one degree."""
    row_index = {}
    for i, r in enumerate(d.row_degrees):
        for m in monomials_of_degree(nvars, degree - r):
            row_index[i, m] = len(row_index)
    rows = []
    for j, c in enumerate(d.column_degrees):
        for m in monomials_of_degree(nvars, degree - c):
            vec = {}
            for i in range(d.nrows):
                f = d.entries[i][j]
                if not f:
                    continue
                for e, coef in f.as_dict().items():
                    key = (i, tuple(a + b for a, b in zip(e, m)))
                    t = row_index[key]
                    vec[t] = vec.get(t, 0) + coef
            rows.append(vec)
    return rows, len(row_index)


def _piece_dim(degrees, degree, nvars):
    from math import comb
    return sum(comb(degree - s + nvars - 1, nvars - 1) for s in degrees if degree >= s)


class ResolutionReport:
    def __init__(self, failures, degree_cap):
        self.failures = list(failures)
        self.degree_cap = degree_cap

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"ResolutionReport(ok={self.ok}, failures={self.failures})"

    def to_json(self):
        return {"ok": self.ok, "degree_cap": self.degree_cap, "failures": self.failures}


def check_resolution(res, degree_cap=None, ideal=None):
    """Itemized check of homogeneity, zero compositions and graded exactness.

    Exactness is verified by ranks in every degree up to ``degree_cap``
    (default: the largest generator degree plus two). At the ideal itself the
    image of ``d_1`` must have the dimension of the ideal in each degree,
    which needs the ideal (taken from ``res.ideal`` when present).
    """
    failures = []
    ds = res.differentials
    nvars = res.ring.nvars
    ideal = ideal if ideal is not None else res.ideal
    for k, d in enumerate(ds, start=1):
        bad = d.bad_entries()
        if bad:
            failures.append(f"d{k}: inhomogeneous entries at {bad[:5]}")
        if k > 1 and d.nrows != ds[k - 2].ncols:
            failures.append(f"d{k}: row count does not match d{k - 1}")
        if k > 1 and list(d.row_degrees) != list(ds[k - 2].column_degrees):
            failures.append(f"d{k}: row degrees do not match d{k - 1}")
    if failures:
        return ResolutionReport(failures, degree_cap)
    for k in range(1, len(ds)):
        if not (ds[k - 1] @ ds[k]).is_zero():
            failures.append(f"d{k}*d{k + 1} is not zero")
    if len(ds) > nvars:
        failures.append(f"length {len(ds)} exceeds the number of variables {nvars}")
    all_degrees = [c for d in ds for c in d.column_degrees]
    if degree_cap is None:
        degree_cap = max(all_degrees, default=0) + 2
    if failures:
        return ResolutionReport(failures, degree_cap)
    ranks = {}
    for k, d in enumerate(ds):
        for m in range(degree_cap + 1):
            rows, _ = _graded_matrix_piece(d, m, nvars)
            ranks[k, m] = rank(rows) if rows else 0
    if ideal is not None and ds:
        hd = hilbert_data(ideal)
        for m in range(degree_cap + 1):
            want = _piece_dim([0], m, nvars) - hd.hilbert_function(m)
            if ranks[0, m] != want:
                failures.append(f"image of d1 in degree {m} has rank {ranks[0, m]}, "
                                f"ideal has dimension {want}")
    for k in range(len(ds)):
        for m in range(degree_cap + 1):
            dim = _piece_dim(ds[k].column_degrees, m, nvars)
            nxt = ranks.get((k + 1, m), 0)
            if ranks[k, m] + nxt != dim:
                failures.append(f"not exact at F{k} in degree {m}: "
                                f"{ranks[k, m]} + {nxt} != {dim}")
    return ResolutionReport(failures, degree_cap)


def betti_of_ideal(ideal, method="schreyer", budget_seconds=None):
    return betti_table(minimal_resolution(ideal, method, budget_seconds))


def regularity_of_ideal(ideal, budget_seconds=None):
    return regularity(betti_of_ideal(ideal, budget_seconds=budget_seconds))


__all__ = ["Resolution", "free_resolution", "schreyer_resolution", "iterated_resolution",
           "minimize", "minimal_resolution", "BettiTable", "betti_table", "regularity",
           "frame_betti_table", "check_resolution", "ResolutionReport", "betti_of_ideal",
           "regularity_of_ideal"]
