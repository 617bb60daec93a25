"""Dense exact matrices over a :class:`~orbitclosure.fields.Field`.

Everything is Gaussian elimination on small dense grids.  Echelon forms are
normalized (pivot 1, zeros above and below each pivot, columns scanned left
to right), which makes every basis returned here deterministic.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .fields import Field, QQ


class ShapeError(ValueError):
    pass


def rref_rows(rows: list[list], ncols: int, field: Field) -> tuple[list[list], list[int]]:
    """Reduce ``rows`` in place to reduced row echelon form.

    Returns the nonzero rows and the pivot columns.
    """
    one = field.one
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != one:
            inv = one / piv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


class Matrix:
    """Immutable dense matrix with entries in one exact field."""

    __slots__ = ("rows", "cols", "field", "_data", "_hash")

    def __init__(self, data: Iterable[Sequence], field: Field = QQ, cols: Optional[int] = None):
        conv = field
        grid = tuple(tuple(conv(x) for x in row) for row in data)
        if cols is None:
            if not grid:
                raise ShapeError("column count needed for a matrix with no rows")
            cols = len(grid[0])
        for row in grid:
            if len(row) != cols:
                raise ShapeError(f"ragged row: expected {cols} entries, got {len(row)}")
        self.rows = len(grid)
        self.cols = cols
        self.field = field
        self._data = grid
        self._hash = None

    @classmethod
    def _raw(cls, grid, rows, cols, field):
        m = object.__new__(cls)
        m._data = grid
        m.rows = rows
        m.cols = cols
        m.field = field
        m._hash = None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        z = field.zero
        return cls._raw(tuple((z,) * cols for _ in range(rows)), rows, cols, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        grid = tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        return cls._raw(grid, n, n, field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, field: Field = QQ) -> "Matrix":
        if not columns:
            return cls.zeros(rows, 0, field)
        return cls([[col[i] for col in columns] for i in range(rows)], field, cols=len(columns))

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, field: Field = QQ) -> "Matrix":
        """Matrix unit with a single 1 at ``(i, j)``."""
        z, o = field.zero, field.one
        grid = tuple(tuple(o if (r, c) == (i, j) else z for c in range(cols)) for r in range(rows))
        return cls._raw(grid, rows, cols, field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list]:
        return [list(row) for row in self._data]

    def entries(self) -> tuple:
        """Row-major entries."""
        return tuple(x for row in self._data for x in row)

    def __iter__(self):
        return iter(self._data)

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        grid = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(grid, self.rows, self.cols, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        grid = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(grid, self.rows, self.cols, self.field)

    def __neg__(self) -> "Matrix":
        grid = tuple(tuple(-a for a in r) for r in self._data)
        return Matrix._raw(grid, self.rows, self.cols, self.field)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        grid = tuple(tuple(c * a for a in r) for r in self._data)
        return Matrix._raw(grid, self.rows, self.cols, self.field)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        ocols = other.column_tuples()
        grid = []
        for r in self._data:
            out = []
            for c in ocols:
                s = z
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                out.append(s)
            grid.append(tuple(out))
        return Matrix._raw(tuple(grid), self.rows, other.cols, self.field)

    def column_tuples(self) -> list[tuple]:
        return [tuple(row[j] for row in self._data) for j in range(self.cols)]

    def __pow__(self, n: int) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeError("power of a non-square matrix")
        result = Matrix.identity(self.rows, self.field)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix._raw(tuple(self.column_tuples()), self.cols, self.rows, self.field)

    T = property(transpose)

    def is_zero(self) -> bool:
        return not any(x for row in self._data for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.field.format(x) for x in row) + "]" for row in self._data)
        return f"Matrix([{body}], {self.field!r}, {self.rows}x{self.cols})"

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ShapeError("hstack needs equal row counts")
        grid = tuple(a + b for a, b in zip(self._data, other._data))
        return Matrix._raw(grid, self.rows, self.cols + other.cols, self.field)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ShapeError("vstack needs equal column counts")
        return Matrix._raw(self._data + other._data, self.rows + other.rows, self.cols, self.field)

    @staticmethod
    def block(blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = None
        for brow in blocks:
            r = brow[0]
            for b in brow[1:]:
                r = r.hstack(b)
            rows = r if rows is None else rows.vstack(r)
        return rows

    def rref(self) -> tuple["Matrix", list[int]]:
        rows, piv = rref_rows(self.tolist(), self.cols, self.field)
        return Matrix._raw(tuple(tuple(r) for r in rows), len(rows), self.cols, self.field), piv

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(Matrix.identity(n, self.field))
        rows, piv = rref_rows(aug.tolist(), 2 * n, self.field)
        if piv[:n] != list(range(n)) or len(rows) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix([r[n:] for r in rows], self.field, cols=n)

    def det(self):
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        a = self.tolist()
        n = self.rows
        d = self.field.one
        for c in range(n):
            pr = next((i for i in range(c, n) if a[i][c]), None)
            if pr is None:
                return self.field.zero
            if pr != c:
                a[c], a[pr] = a[pr], a[c]
                d = -d
            piv = a[c][c]
            d = d * piv
            for i in range(c + 1, n):
                f = a[i][c]
                if f:
                    f = f / piv
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return d


def rank(m: Matrix) -> int:
    """Rank over the matrix's own field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, piv = rref_rows(m.tolist(), m.cols, m.field)
    return len(piv)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right null space, returned as the rows of its RREF."""
    n = m.cols
    field = m.field
    if m.rows == 0:
        rows = [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
        return [tuple(r) for r in rows]
    red, piv = rref_rows(m.tolist(), n, field)
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for r, p in enumerate(piv):
            v[p] = -red[r][f]
        basis.append(v)
    if not basis:
        return []
    normalized, _ = rref_rows(basis, n, field)
    return [tuple(r) for r in normalized]


def solve(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """Solve ``a @ x == b``; ``None`` when inconsistent.

    Non-pivot coordinates of each solution column are set to zero.
    """
    if a.rows != b.rows:
        raise ShapeError(f"solve: {a.rows} equations but right-hand side has {b.rows} rows")
    field = a.field
    n = a.cols
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    red, piv = rref_rows(aug, n + b.cols, field)
    if any(p >= n for p in piv):
        return None
    x = [[field.zero] * b.cols for _ in range(n)]
    for r, p in enumerate(piv):
        x[p] = list(red[r][n:])
    return Matrix(x, field, cols=b.cols)


def is_nilpotent_matrix(m: Matrix) -> bool:
    if m.rows != m.cols:
        raise ShapeError("nilpotency needs a square matrix")
    return (m ** m.rows).is_zero()


def vector_in_span(v: Sequence, basis: Sequence[Sequence], field: Field) -> bool:
    if not basis:
        return not any(v)
    before = len(rref_rows([list(b) for b in basis], len(v), field)[1])
    after = len(rref_rows([list(b) for b in basis] + [list(v)], len(v), field)[1])
    return before == after


def span_basis(vectors: Sequence[Sequence], length: int, field: Field) -> list[tuple]:
    """RREF basis of the span of ``vectors``."""
    if not vectors:
        return []
    rows, _ = rref_rows([list(v) for v in vectors], length, field)
    return [tuple(r) for r in rows]
