"""Sparse exact linear algebra over a fixed field.

Vectors and matrices store only nonzero entries, keyed by index.  All
values are immutable after construction and all operations are pure, so
instances can be shared freely.  Elimination uses deterministic pivoting
(first usable row per column, columns in order), which makes kernel bases
and solutions reproducible for a fixed input.
"""

from __future__ import annotations

from .errors import DimensionMismatch


class Vector:
    """Sparse column vector; no zero entries are stored."""

    __slots__ = ("field", "dim", "data")

    def __init__(self, field, dim, data=None):
        self.field = field
        self.dim = dim
        self.data = {i: c for i, c in (data or {}).items() if c}
        for i in self.data:
            if not 0 <= i < dim:
                raise DimensionMismatch(f"index {i} out of range for dim {dim}")

    @classmethod
    def zero(cls, field, dim):
        return cls(field, dim)

    @classmethod
    def unit(cls, field, dim, i):
        return cls(field, dim, {i: field.one()})

    @classmethod
    def from_list(cls, field, values):
        return cls(field, len(values), dict(enumerate(values)))

    def to_list(self):
        zero = self.field.zero()
        return [self.data.get(i, zero) for i in range(self.dim)]

    def get(self, i):
        return self.data.get(i, self.field.zero())

    def items(self):
        return sorted(self.data.items())

    def _check(self, other):
        if self.field != other.field or self.dim != other.dim:
            raise DimensionMismatch("vector shape/field mismatch")

    def __add__(self, other):
        self._check(other)
        data = dict(self.data)
        for i, c in other.data.items():
            data[i] = data.get(i, self.field.zero()) + c
        return Vector(self.field, self.dim, data)

    def __sub__(self, other):
        self._check(other)
        data = dict(self.data)
        for i, c in other.data.items():
            data[i] = data.get(i, self.field.zero()) - c
        return Vector(self.field, self.dim, data)

    def __neg__(self):
        return Vector(self.field, self.dim, {i: -c for i, c in self.data.items()})

    def scale(self, c):
        if not c:
            return Vector(self.field, self.dim)
        return Vector(self.field, self.dim, {i: c * v for i, v in self.data.items()})

    def dot(self, other):
        self._check(other)
        small, big = (self.data, other.data) if len(self.data) <= len(other.data) else (other.data, self.data)
        acc = self.field.zero()
        for i, c in small.items():
            if i in big:
                acc = acc + c * big[i]
        return acc

    def is_zero(self):
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def __eq__(self, other):
        return (isinstance(other, Vector) and self.field == other.field
                and self.dim == other.dim and self.data == other.data)

    def __hash__(self):
        return hash((self.dim, tuple(self.items())))

    def __repr__(self):
        return f"Vector({self.dim}, {dict(self.items())})"


class Matrix:
    """Sparse matrix; entries keyed by (row, col), no zeros stored."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = {rc: c for rc, c in (data or {}).items() if c}
        for r, c in self.data:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatch(f"entry ({r},{c}) out of range for {rows}x{cols}")

    @classmethod
    def identity(cls, field, n):
        one = field.one()
        return cls(field, n, n, {(i, i): one for i in range(n)})

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols)

    @classmethod
    def from_columns(cls, field, rows, columns):
        data = {}
        for j, col in enumerate(columns):
            for i, c in col.data.items():
                data[(i, j)] = c
        return cls(field, rows, len(columns), data)

    @classmethod
    def from_rows_dense(cls, field, rows):
        data = {}
        for i, row in enumerate(rows):
            for j, c in enumerate(row):
                if c:
                    data[(i, j)] = c
        return cls(field, len(rows), len(rows[0]) if rows else 0, data)

    def entries(self):
        return sorted(self.data.items())

    def get(self, i, j):
        return self.data.get((i, j), self.field.zero())

    def column(self, j):
        return Vector(self.field, self.rows,
                      {i: c for (i, jj), c in self.data.items() if jj == j})

    def columns(self):
        cols = [{} for _ in range(self.cols)]
        for (i, j), c in self.data.items():
            cols[j][i] = c
        return [Vector(self.field, self.rows, d) for d in cols]

    def row_dicts(self):
        rows = [{} for _ in range(self.rows)]
        for (i, j), c in self.data.items():
            rows[i][j] = c
        return rows

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      {(j, i): c for (i, j), c in self.data.items()})

    def __add__(self, other):
        self._check_shape(other)
        data = dict(self.data)
        for rc, c in other.data.items():
            data[rc] = data.get(rc, self.field.zero()) + c
        return Matrix(self.field, self.rows, self.cols, data)

    def __sub__(self, other):
        self._check_shape(other)
        data = dict(self.data)
        for rc, c in other.data.items():
            data[rc] = data.get(rc, self.field.zero()) - c
        return Matrix(self.field, self.rows, self.cols, data)

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols,
                      {rc: -c for rc, c in self.data.items()})

    def scale(self, c):
        if not c:
            return Matrix(self.field, self.rows, self.cols)
        return Matrix(self.field, self.rows, self.cols,
                      {rc: c * v for rc, v in self.data.items()})

    def __mul__(self, other):
        """Matrix product self * other."""
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows or self.field != other.field:
            raise DimensionMismatch("matrix product shape/field mismatch")
        by_row = [[] for _ in range(other.rows)]
        for (j, k), c in other.data.items():
            by_row[j].append((k, c))
        data = {}
        zero = self.field.zero()
        for (i, j), a in self.data.items():
            for k, b in by_row[j]:
                key = (i, k)
                data[key] = data.get(key, zero) + a * b
        return Matrix(self.field, self.rows, other.cols, data)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product self * v."""
        if v.dim != self.cols or v.field != self.field:
            raise DimensionMismatch("matrix apply shape/field mismatch")
        zero = self.field.zero()
        out = {}
        by_col = {}
        for (i, j), c in self.data.items():
            by_col.setdefault(j, []).append((i, c))
        for j, cv in v.data.items():
            for i, c in by_col.get(j, ()):
                out[i] = out.get(i, zero) + c * cv
        return Vector(self.field, self.rows, out)

    def apply_functional(self, f: Vector) -> Vector:
        """Row-functional composition f o self, i.e. f^T * self."""
        if f.dim != self.rows or f.field != self.field:
            raise DimensionMismatch("functional apply shape/field mismatch")
        zero = self.field.zero()
        out = {}
        for (i, j), c in self.data.items():
            if i in f.data:
                out[j] = out.get(j, zero) + f.data[i] * c
        return Vector(self.field, self.cols, out)

    def is_zero(self):
        return not self.data

    def _check_shape(self, other):
        if (self.rows, self.cols, self.field) != (other.rows, other.cols, other.field):
            raise DimensionMismatch("matrix shape/field mismatch")

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(self.entries())))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {dict(self.entries())})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with row-major pair indexing (i*rows_b + k, j*cols_b + l)."""
    a.field.check_same(b.field)
    data = {}
    for (i, j), x in a.data.items():
        for (k, l), y in b.data.items():
            data[(i * b.rows + k, j * b.cols + l)] = x * y
    return Matrix(a.field, a.rows * b.rows, a.cols * b.cols, data)


def _rref(rows, ncols, field, augmented_from=None):
    """Reduce a list of sparse rows (dicts col->scalar) to reduced row echelon form.

    Returns (pivots, reduced) where pivots is a list of (row_index, col) pairs
    into `reduced`.  If `augmented_from` is given, columns >= augmented_from
    are never chosen as pivots (augmented-system solving).
    """
    work = [dict(r) for r in rows]
    placed = []
    pivots = []
    remaining = list(range(len(work)))
    pivot_limit = ncols if augmented_from is None else augmented_from
    for col in range(pivot_limit):
        hit = None
        for pos, ri in enumerate(remaining):
            if work[ri].get(col):
                hit = pos
                break
        if hit is None:
            continue
        ri = remaining.pop(hit)
        row = work[ri]
        inv = field.one() / row[col]
        row = {c: inv * v for c, v in row.items() if v}
        for other in placed:
            orow = work[other]
            f = orow.get(col)
            if f:
                for c, v in row.items():
                    nv = orow.get(c, field.zero()) - f * v
                    if nv:
                        orow[c] = nv
                    else:
                        orow.pop(c, None)
        for pos in remaining:
            orow = work[pos]
            f = orow.get(col)
            if f:
                for c, v in row.items():
                    nv = orow.get(c, field.zero()) - f * v
                    if nv:
                        orow[c] = nv
                    else:
                        orow.pop(c, None)
        work[ri] = row
        placed.append(ri)
        pivots.append((ri, col))
    reduced = [work[ri] for ri, _ in pivots]
    leftover = [work[ri] for ri in remaining if work[ri]]
    pivot_list = [(n, col) for n, (_, col) in enumerate(pivots)]
    return pivot_list, reduced, leftover


def rank(m: Matrix) -> int:
    pivots, _, _ = _rref(m.row_dicts(), m.cols, m.field)
    return len(pivots)


def kernel_basis(m: Matrix):
    """Basis of the right null space {v : m*v = 0}, in reduced echelon convention.

    Deterministic: free columns in increasing order, each basis vector has a
    single unit entry in its free column.
    """
    pivots, reduced, _ = _rref(m.row_dicts(), m.cols, m.field)
    pivot_cols = {col for _, col in pivots}
    basis = []
    one = m.field.one()
    for free in range(m.cols):
        if free in pivot_cols:
            continue
        data = {free: one}
        for r, col in pivots:
            c = reduced[r].get(free)
            if c:
                data[col] = -c
        basis.append(Vector(m.field, m.cols, data))
    return basis


def solve(m: Matrix, b: Vector):
    """One solution of m*x = b with all free variables set to zero, or None."""
    if b.dim != m.rows:
        raise DimensionMismatch("solve shape mismatch")
    rows = m.row_dicts()
    for i, c in b.data.items():
        rows[i][m.cols] = c
    pivots, reduced, leftover = _rref(rows, m.cols + 1, m.field, augmented_from=m.cols)
    for row in leftover:
        if row.get(m.cols):
            return None
    data = {}
    for r, col in pivots:
        c = reduced[r].get(m.cols)
        if c:
            data[col] = c
    return Vector(m.field, m.cols, data)


def column_space_basis(m: Matrix):
    """The pivot columns of m, as vectors (deterministic image basis)."""
    pivots, _, _ = _rref(m.row_dicts(), m.cols, m.field)
    return [m.column(col) for _, col in pivots]


def in_span(vectors, v: Vector) -> bool:
    """True iff v lies in the span of `vectors`."""
    if v.is_zero():
        return True
    if not vectors:
        return False
    m = Matrix.from_columns(v.field, v.dim, list(vectors))
    return solve(m, v) is not None


def inverse(m: Matrix):
    """Two-sided inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        return None
    n = m.rows
    rows = m.row_dicts()
    one = m.field.one()
    for i in range(n):
        rows[i][n + i] = one
    pivots, reduced, _ = _rref(rows, 2 * n, m.field, augmented_from=n)
    if len(pivots) < n:
        return None
    data = {}
    for r, col in pivots:
        for c, v in reduced[r].items():
            if c >= n:
                data[(col, c - n)] = v
    return Matrix(m.field, n, n, data)
