"""Exact integer matrices and the Smith normal form.

Everything here works on Python ints, so no entry can overflow. Matrices are
immutable; every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, ShapeError


class IntegerMatrix:
    """Dense immutable integer matrix with explicit shape.

    The shape is stored separately from the entries so that degenerate
    matrices such as 0x3 or 2x0 keep their dimensions.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[int] = ()):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        flat = tuple(int(x) for x in entries)
        if not flat and rows * cols:
            flat = (0,) * (rows * cols)
        if len(flat) != rows * cols:
            raise ShapeError(f"{len(flat)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self._data = flat

    @classmethod
    def _wrap(cls, rows: int, cols: int, flat: tuple) -> IntegerMatrix:
        # trusted fast path: ``flat`` is a tuple of ints of the right length
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = rows, cols, flat
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged row list")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag: Sequence[int]) -> IntegerMatrix:
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major entries."""
        return self._data

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        _check_index(i, self.rows, "row")
        _check_index(j, self.cols, "column")
        return self._data[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        _check_index(i, self.rows, "row")
        return list(self._data[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list[int]:
        _check_index(j, self.cols, "column")
        return list(self._data[j::self.cols]) if self.rows else []

    def to_lists(self) -> list[list[int]]:
        c = self.cols
        return [list(self._data[i * c:(i + 1) * c]) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self._data)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        return f"IntegerMatrix({self.rows}, {self.cols}, {self.to_lists()})"

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        return matmul(self, other)

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix._wrap(self.rows, self.cols, tuple(-x for x in self._data))

    def scaled(self, c: int) -> IntegerMatrix:
        return IntegerMatrix._wrap(self.rows, self.cols, tuple(c * x for x in self._data))

    def mod2(self) -> IntegerMatrix:
        return IntegerMatrix._wrap(self.rows, self.cols, tuple(x & 1 for x in self._data))


def _check_index(i, n, what):
    if not 0 <= i < n:
        raise IndexOutOfRange(f"{what} index {i} out of range for size {n}")


def matmul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bl = b.to_lists()
    out = []
    for r in a.to_lists():
        acc = [0] * b.cols
        for x, brow in zip(r, bl):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.extend(acc)
    return IntegerMatrix(a.rows, b.cols, out)


def transpose(a: IntegerMatrix) -> IntegerMatrix:
    return IntegerMatrix(a.cols, a.rows, (a._data[i * a.cols + j] for j in range(a.cols) for i in range(a.rows)))


def add_scaled_column(a: IntegerMatrix, src: int, dst: int, c: int) -> IntegerMatrix:
    """Return ``a`` with ``c * column(src)`` added to column ``dst``."""
    _check_index(src, a.cols, "column")
    _check_index(dst, a.cols, "column")
    rows = a.to_lists()
    for r in rows:
        r[dst] += c * r[src]
    return IntegerMatrix.from_rows(rows, a.cols)


def add_scaled_row(a: IntegerMatrix, src: int, dst: int, c: int) -> IntegerMatrix:
    """Return ``a`` with ``c * row(src)`` added to row ``dst``."""
    _check_index(src, a.rows, "row")
    _check_index(dst, a.rows, "row")
    rows = a.to_lists()
    rows[dst] = [x + c * y for x, y in zip(rows[dst], rows[src])]
    return IntegerMatrix.from_rows(rows, a.cols)


def delete_row(a: IntegerMatrix, i: int) -> IntegerMatrix:
    _check_index(i, a.rows, "row")
    rows = a.to_lists()
    del rows[i]
    return IntegerMatrix.from_rows(rows, a.cols)


def delete_col(a: IntegerMatrix, j: int) -> IntegerMatrix:
    _check_index(j, a.cols, "column")
    rows = a.to_lists()
    for r in rows:
        del r[j]
    return IntegerMatrix.from_rows(rows, a.cols - 1)


def negate_row(a: IntegerMatrix, i: int) -> IntegerMatrix:
    _check_index(i, a.rows, "row")
    rows = a.to_lists()
    rows[i] = [-x for x in rows[i]]
    return IntegerMatrix.from_rows(rows, a.cols)


def negate_col(a: IntegerMatrix, j: int) -> IntegerMatrix:
    _check_index(j, a.cols, "column")
    rows = a.to_lists()
    for r in rows:
        r[j] = -r[j]
    return IntegerMatrix.from_rows(rows, a.cols)


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` and optional transforms.

    When transforms were requested, ``U @ A @ V`` equals the ``rows x cols``
    diagonal matrix holding ``diagonal``.
    """

    diagonal: tuple[int, ...]
    rows: int
    cols: int
    U: IntegerMatrix | None = None
    V: IntegerMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.diagonal(self.rows, self.cols, self.diagonal)


def snf(a: IntegerMatrix, with_transforms: bool = False) -> SnfResult:
    """Smith normal form of ``a``.

    Pivots are chosen as the nonzero entry of least absolute value in the
    remaining block (lowest row, then lowest column, on ties).
    """
    m, n = a.rows, a.cols
    A = a.to_lists()
    U = [[int(i == j) for j in range(m)] for i in range(m)] if with_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if with_transforms else None
    diag = []
    t = 0
    while t < m and t < n:
        p = _min_pivot(A, t, m, n)
        if p is None:
            break
        _swap_rows(A, U, t, p[0])
        _swap_cols(A, V, t, p[1])
        while True:
            piv = A[t][t]
            done = True
            # clear column t below the pivot
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    q = x // piv
                    if q:
                        _row_axpy(A, U, t, i, -q, t)
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                x = A[t][j]
                if x:
                    q = x // piv
                    if q:
                        _col_axpy(A, V, t, j, -q, t)
                    if A[t][j]:
                        done = False
            if not done:
                p = _min_pivot_cross(A, t, m, n)
                _swap_rows(A, U, t, p[0])
                _swap_cols(A, V, t, p[1])
                continue
            bad = None if piv in (1, -1) else _non_divisible(A, t, m, n, piv)
            if bad is None:
                break
            # pull the offending row into the pivot row, then reduce again
            _row_axpy(A, U, bad, t, 1, t)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        diag.append(A[t][t])
        t += 1
    if not with_transforms:
        return SnfResult(tuple(diag), m, n)
    return SnfResult(
        tuple(diag), m, n, IntegerMatrix.from_rows(U, m), IntegerMatrix.from_rows(V, n)
    )


def _min_pivot(A, t, m, n):
    best = None
    bv = 0
    for i in range(t, m):
        row = A[i]
        for j in range(t, n):
            x = row[j]
            if x:
                ax = x if x > 0 else -x
                if best is None or ax < bv:
                    best, bv = (i, j), ax
                    if ax == 1:
                        return best
    return best


def _min_pivot_cross(A, t, m, n):
    # after a reduction pass only row t and column t hold off-pivot nonzeros;
    # scan in (row, column) order so ties resolve to the lowest row, then column
    cands = [(t, j) for j in range(t, n)] + [(i, t) for i in range(t + 1, m)]
    best, bv = None, 0
    for i, j in cands:
        x = abs(A[i][j])
        if x and (best is None or x < bv):
            best, bv = (i, j), x
    return best


def _non_divisible(A, t, m, n, piv):
    for i in range(t + 1, m):
        row = A[i]
        for j in range(t + 1, n):
            if row[j] % piv:
                return i
    return None


def _swap_rows(A, U, i, j):
    if i != j:
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]


def _swap_cols(A, V, i, j):
    if i != j:
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]


def _row_axpy(A, U, src, dst, c, start):
    # row(dst) += c * row(src); columns before ``start`` are zero in both rows of A
    rs, rd = A[src], A[dst]
    for k in range(start, len(rd)):
        if rs[k]:
            rd[k] += c * rs[k]
    if U is not None:
        us, ud = U[src], U[dst]
        for k in range(len(ud)):
            if us[k]:
                ud[k] += c * us[k]


def _col_axpy(A, V, src, dst, c, start):
    # col(dst) += c * col(src)
    for r in A[start:]:
        if r[src]:
            r[dst] += c * r[src]
    if V is not None:
        for r in V:
            if r[src]:
                r[dst] += c * r[src]


def invariant_factors(a: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors of ``a`` (including 1s); same values as ``snf(a).diagonal``.

    Unit entries are eliminated first on a sparse row representation, which
    is where boundary matrices spend most of their pivots; the remaining block
    goes through :func:`snf`.
    """
    c = a.cols
    data = a.entries
    rows = []
    for i in range(a.rows):
        r = {j: x for j, x in enumerate(data[i * c:(i + 1) * c]) if x}
        if r:
            rows.append(r)
    units = 0
    while True:
        hit = None
        for i, r in enumerate(rows):
            for j, x in r.items():
                if x == 1 or x == -1:
                    hit = i, j, x
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, x = hit
        prow = rows.pop(i)
        del prow[j]
        units += 1
        keep = []
        for r in rows:
            y = r.pop(j, 0)
            if y:
                f = y * x  # x is its own inverse
                for jj, v in prow.items():
                    w = r.get(jj, 0) - f * v
                    if w:
                        r[jj] = w
                    else:
                        del r[jj]
            if r:
                keep.append(r)
        rows = keep
    if not rows:
        return (1,) * units
    cols = sorted({j for r in rows for j in r})
    rest = IntegerMatrix.from_rows([[r.get(j, 0) for j in cols] for r in rows], len(cols))
    return (1,) * units + snf(rest).diagonal


def rank(a: IntegerMatrix) -> int:
    """Rank over the rationals."""
    return len(snf(a).diagonal)


def rank_mod2(a: IntegerMatrix) -> int:
    """Rank of ``a`` over the field with two elements."""
    pivots: dict[int, int] = {}
    r = 0
    c = a.cols
    data = a.entries
    for i in range(a.rows):
        v = 0
        for j, x in enumerate(data[i * c:(i + 1) * c]):
            if x & 1:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = v
                r += 1
                break
            v ^= p
    return r
