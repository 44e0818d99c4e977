"""Dense exact matrices over one of the scalar rings.

Elimination uses first-nonzero pivoting; in exact arithmetic no pivot
heuristics are needed.  Column vectors are ``n x 1`` matrices.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .scalars import QQ, ScalarRing, common_ring, invert, ring_of

__all__ = [
    "FieldRequiredError",
    "InconsistentSystemError",
    "Matrix",
    "ShapeError",
    "column_vector",
    "common_nullspace",
    "matadd",
    "matmul",
    "nullspace",
    "rank",
    "rref",
    "scale",
    "solve",
    "trace",
]


class ShapeError(ValueError):
    pass


class FieldRequiredError(TypeError):
    """Elimination was requested over a ring that is not a field."""


class InconsistentSystemError(ValueError):
    """``A x = b`` has no solution."""


class Matrix:
    """An immutable ``rows x cols`` matrix with entries in ``ring``."""

    __slots__ = ("ring", "rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence], ring: ScalarRing | None = None, cols: int | None = None):
        data = [list(r) for r in entries]
        rows = len(data)
        if cols is None:
            if not rows:
                raise ShapeError("cannot infer the column count of an empty matrix")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ShapeError("ragged matrix rows")
        if ring is None:
            ring = QQ
            for r in data:
                for x in r:
                    rx = ring_of(x)
                    if rx != QQ:
                        ring = rx
                        break
                if ring != QQ:
                    break
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = tuple(tuple(ring(x) for x in r) for r in data)

    @classmethod
    def _raw(cls, data, ring, rows, cols) -> Matrix:
        obj = object.__new__(cls)
        obj.ring = ring
        obj.rows = rows
        obj.cols = cols
        obj._data = tuple(tuple(r) for r in data)
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: ScalarRing = QQ) -> Matrix:
        z = ring.zero
        return cls._raw([[z] * cols for _ in range(rows)], ring, rows, cols)

    @classmethod
    def identity(cls, n: int, ring: ScalarRing = QQ) -> Matrix:
        z, o = ring.zero, ring.one
        return cls._raw([[o if i == j else z for j in range(n)] for i in range(n)], ring, n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], ring: ScalarRing, rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        data = [[ring(columns[j][i]) for j in range(len(columns))] for i in range(rows)]
        return cls._raw(data, ring, rows, len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    @property
    def flat(self) -> tuple:
        """Entries of a column vector, top to bottom."""
        if self.cols != 1:
            raise ShapeError("flat is defined for column vectors only")
        return tuple(r[0] for r in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> Matrix:
        return Matrix._raw(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.ring,
            self.cols,
            self.rows,
        )

    T = property(transpose)

    def _check_ring(self, other: Matrix) -> ScalarRing:
        return common_ring(self.ring, other.ring)

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        ring = self._check_ring(other)
        z = ring.zero
        cols_b = [
            [(k, other._data[k][j]) for k in range(other.rows) if other._data[k][j]]
            for j in range(other.cols)
        ]
        out = []
        for r in self._data:
            row = []
            for col in cols_b:
                acc = z
                for k, b in col:
                    a = r[k]
                    if a:
                        acc = acc + a * b
                row.append(ring(acc))
            out.append(row)
        return Matrix._raw(out, ring, self.rows, other.cols)

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        ring = self._check_ring(other)
        return Matrix._raw(
            [[ring(a + b) for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            ring,
            self.rows,
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix._raw([[-a for a in r] for r in self._data], self.ring, self.rows, self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        ring = common_ring(self.ring, ring_of(c))
        return Matrix._raw(
            [[ring(c * a) for a in r] for r in self._data], ring, self.rows, self.cols
        )

    def __rmul__(self, c) -> Matrix:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._data, other._data) for a, b in zip(r, s)
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(a for r in self._data for a in r)

    def trace(self):
        if not self.is_square():
            raise ShapeError(f"trace of a non-square {self.shape} matrix")
        acc = self.ring.zero
        for i in range(self.rows):
            acc = acc + self._data[i][i]
        return self.ring(acc)

    def map(self, fn, ring: ScalarRing) -> Matrix:
        """Apply ``fn`` entrywise, producing a matrix over ``ring``."""
        return Matrix._raw(
            [[ring(fn(a)) for a in r] for r in self._data], ring, self.rows, self.cols
        )

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in r) for r in self._data)
        return f"Matrix[{self.rows}x{self.cols} over {self.ring.name}]({body})"


def column_vector(entries: Iterable, ring: ScalarRing) -> Matrix:
    entries = list(entries)
    return Matrix._raw([[ring(x)] for x in entries], ring, len(entries), 1)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def scale(c, a: Matrix) -> Matrix:
    return a.scale(c)


def trace(a: Matrix):
    return a.trace()


def _require_field(ring: ScalarRing) -> None:
    if not ring.is_field:
        raise FieldRequiredError(
            f"elimination needs a field; embed {ring.name} into its fraction field first"
        )


def _rref_rows(rows: list[list], ncols: int, ring: ScalarRing) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form of ``rows``; returns (nonzero rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = invert(rows[r][c])
        rows[r] = [ring(x * inv) if x else x for x in rows[r]]
        pivot_row = rows[r]
        nz = [(j, x) for j, x in enumerate(pivot_row) if x and j >= c]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j, x in nz:
                        row[j] = ring(row[j] - f * x)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    _require_field(a.ring)
    rows, pivots = _rref_rows([list(r) for r in a._data], a.cols, a.ring)
    z = a.ring.zero
    full = rows + [[z] * a.cols for _ in range(a.rows - len(rows))]
    return Matrix._raw(full, a.ring, a.rows, a.cols), pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def _canonical_basis(vectors: list[list], n: int, ring: ScalarRing) -> list[Matrix]:
    # reduced echelon basis of the span: first nonzero coordinate 1, unique for the subspace
    rows, _ = _rref_rows([list(v) for v in vectors], n, ring)
    return [column_vector(r, ring) for r in rows]


def nullspace(a: Matrix) -> list[Matrix]:
    """Basis of ``{x : A x = 0}`` as column vectors.

    The basis is the reduced echelon basis of the kernel, so it depends only
    on the kernel itself.  Every vector is checked against ``A`` by
    multiplication before being returned.
    """
    _require_field(a.ring)
    ring = a.ring
    rows, pivots = _rref_rows([list(r) for r in a._data], a.cols, ring)
    free = [c for c in range(a.cols) if c not in set(pivots)]
    z, o = ring.zero, ring.one
    vectors = []
    for f in free:
        v = [z] * a.cols
        v[f] = o
        for r, pc in enumerate(pivots):
            if rows[r][f]:
                v[pc] = ring(-rows[r][f])
        vectors.append(v)
    basis = _canonical_basis(vectors, a.cols, ring)
    for b in basis:
        if not (a @ b).is_zero():
            raise ArithmeticError("nullspace vector failed verification")
    return basis


def common_nullspace(blocks: Iterable[Matrix], n: int, ring: ScalarRing) -> list[Matrix]:
    """Nullspace of the vertical stack of ``blocks`` (each with ``n`` columns).

    The kernel is narrowed block by block (kernel of ``B`` restricted to the
    kernel found so far), which gives the same subspace as eliminating the
    full stack but keeps every intermediate system small.
    """
    _require_field(ring)
    current: Matrix | None = None  # columns span the kernel so far
    for b in blocks:
        if b.cols != n:
            raise ShapeError(f"block has {b.cols} columns, expected {n}")
        if current is None:
            kern = nullspace(b)
            if len(kern) == n:
                continue
            current = Matrix.from_columns([k.flat for k in kern], ring, n)
        else:
            restricted = b @ current
            if restricted.is_zero():
                continue
            kern = nullspace(restricted)
            if not kern:
                return []
            current = current @ Matrix.from_columns([k.flat for k in kern], ring, current.cols)
        if current.cols == 0:
            return []
    if current is None:
        return [column_vector(r, ring) for r in Matrix.identity(n, ring)._data]
    return _canonical_basis([list(current.column(j)) for j in range(current.cols)], n, ring)


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Some solution of ``A x = b``; raises :class:`InconsistentSystemError` if none exists."""
    _require_field(a.ring)
    if b.cols != 1 or b.rows != a.rows:
        raise ShapeError(f"right-hand side {b.shape} does not match {a.shape}")
    ring = a._check_ring(b)
    aug = [list(r) + [ring(b._data[i][0])] for i, r in enumerate(a._data)]
    rows, pivots = _rref_rows(aug, a.cols + 1, ring)
    if pivots and pivots[-1] == a.cols:
        raise InconsistentSystemError("the linear system is inconsistent")
    x = [ring.zero] * a.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][a.cols]
    sol = column_vector(x, ring)
    if a @ sol != b:
        raise ArithmeticError("solution failed verification")
    return sol
