"""Graded matrices between free modules and their syzygies."""
from ..errors import NotHomogeneousError, RingMismatchError
from ..groebner.modules import FreeModule, minimal_module_generators, module_groebner


class GradedMatrix:
    """Matrix of polynomials mapping ``F = (+) R(-c_j)`` to ``G = (+) R(-r_i)``.

    Column ``j`` is the image of the generator of degree ``column_degrees[j]``;
    a nonzero entry ``(i, j)`` is homogeneous of degree
    ``column_degrees[j] - row_degrees[i]``.
    """

    def __init__(self, ring, entries, row_degrees, column_degrees, check=True):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        self.row_degrees = tuple(int(d) for d in row_degrees)
        self.column_degrees = tuple(int(d) for d in column_degrees)
        if len(self.entries) != len(self.row_degrees):
            raise ValueError("row count does not match row degrees")
        for row in self.entries:
            if len(row) != len(self.column_degrees):
                raise ValueError("column count does not match column degrees")
        if check:
            self.check_homogeneous()

    @classmethod
    def from_columns(cls, ring, columns, row_degrees, column_degrees, check=True):
        rows = [[col[i] for col in columns] for i in range(len(row_degrees))]
        return cls(ring, rows, row_degrees, column_degrees, check)

    @property
    def shape(self):
        return len(self.row_degrees), len(self.column_degrees)

    @property
    def nrows(self):
        return len(self.row_degrees)

    @property
    def ncols(self):
        return len(self.column_degrees)

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def check_homogeneous(self):
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f.ring != self.ring:
                    raise RingMismatchError(f"entry ({i},{j}) lies in another ring")
                if f:
                    want = self.column_degrees[j] - self.row_degrees[i]
                    if f.homogeneous_degree(0) != want:
                        raise NotHomogeneousError(
                            f"entry ({i},{j}) = {f} is not homogeneous of degree {want}")

    def bad_entries(self):
        """Positions of entries violating the degree pattern."""
        bad = []
        for i, row in enumerate(self.entries):
            for j, f in enumerate(row):
                if f and f.homogeneous_degree(0) != self.column_degrees[j] - self.row_degrees[i]:
                    bad.append((i, j))
        return bad

    def is_zero(self):
        return all(not f for row in self.entries for f in row)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in composition")
        zero = self.ring.zero
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMatrix(self.ring, rows, self.row_degrees, other.column_degrees, check=False)

    def has_unit_entry(self):
        return any(f and f.is_constant() for row in self.entries for f in row)

    def transpose(self):
        """The dual map, with negated degrees."""
        rows = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return GradedMatrix(self.ring, rows, [-d for d in self.column_degrees],
                            [-d for d in self.row_degrees], check=False)

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and self.ring == other.ring
                and self.entries == other.entries and self.row_degrees == other.row_degrees
                and self.column_degrees == other.column_degrees)

    __hash__ = None

    def __repr__(self):
        return (f"GradedMatrix({self.nrows}x{self.ncols}, rows={list(self.row_degrees)}, "
                f"cols={list(self.column_degrees)})")

    def to_json(self):
        return {
            "row_degrees": list(self.row_degrees),
            "column_degrees": list(self.column_degrees),
            "entries": [[str(f) for f in row] for row in self.entries],
        }


def syzygy_matrix(M, minimal=True, budget_seconds=None):
    """Matrix whose columns generate the kernel of ``M``.

    Computed from a position-over-term basis of the columns of ``[M; 1]``:
    basis vectors vanishing in the first ``nrows`` positions are syzygies.
    With ``minimal`` the generators are pruned to a minimal homogeneous set.
    """
    M.check_homogeneous()
    ring = M.ring
    p, m = M.shape
    shifts = list(M.row_degrees) + list(M.column_degrees)
    F = FreeModule(ring, shifts)
    vectors = []
    for j in range(m):
        v = list(M.column(j)) + [ring.zero] * m
        v[p + j] = ring.one
        vectors.append(v)
    gb = module_groebner(F, vectors, budget_seconds=budget_seconds)
    syz = [v[p:] for v in gb if all(not c for c in v[:p])]
    K = FreeModule(ring, M.column_degrees)
    if minimal:
        syz = minimal_module_generators(K, syz)
    degrees = []
    for v in syz:
        for f, s in zip(v, M.column_degrees):
            if f:
                degrees.append(f.total_degree + s)
                break
    order = sorted(range(len(syz)), key=lambda k: degrees[k])
    cols = [syz[k] for k in order]
    return GradedMatrix.from_columns(ring, cols, M.column_degrees, [degrees[k] for k in order])
