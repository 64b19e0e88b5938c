"""Dense exact matrices over Python integers and fractions.

Scalars are plain ``int`` (arbitrary precision) and ``fractions.Fraction``
(always stored in lowest terms with a positive denominator).  Matrices are
immutable row tuples; all algorithms are fraction-free and never round.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, SingularMatrix


class Matrix:
    """Immutable dense matrix with exact (int or Fraction) entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self._check_entries()

    def _check_entries(self):
        pass

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return Matrix([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def order(self) -> int:
        if not self.is_square:
            raise DimensionMismatch(f"matrix of shape {self.shape} has no order")
        return self.nrows

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return self.nrows

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"{type(self).__name__}([{body}])"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self) -> "Matrix":
        return type(self)(zip(*self.rows))

    def __matmul__(self, other):
        return mat_mul(self, other)


class Matrix01(Matrix):
    """Square matrix with every entry 0 or 1."""

    __slots__ = ()

    def _check_entries(self):
        if not self.is_square or self.nrows < 1:
            raise DimensionMismatch(f"0/1 matrix must be square of order >= 1, got {self.shape}")
        for r in self.rows:
            for x in r:
                if x != 0 and x != 1:
                    raise ValueError(f"0/1 matrix entry {x!r} not in {{0, 1}}")
        self.rows = tuple(tuple(int(x) for x in r) for r in self.rows)


class MatrixPM1(Matrix):
    """Square matrix with every entry -1 or 1."""

    __slots__ = ()

    def _check_entries(self):
        if not self.is_square or self.nrows < 1:
            raise DimensionMismatch(f"+-1 matrix must be square of order >= 1, got {self.shape}")
        for r in self.rows:
            for x in r:
                if x != 1 and x != -1:
                    raise ValueError(f"+-1 matrix entry {x!r} not in {{-1, 1}}")
        self.rows = tuple(tuple(int(x) for x in r) for r in self.rows)


def as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


def det_exact(m) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Pivots are the first nonzero entry at or below the diagonal, so the
    sequence of intermediate states is reproducible.  Rational entries are
    handled by clearing row denominators first; the result is then a Fraction.
    """
    m = as_matrix(m)
    n = m.order
    if n == 0:
        return 1
    a, scales = _integer_rows(m)
    if any(s != 1 for s in scales):
        d = det_exact(Matrix(a))
        for s in scales:
            d = Fraction(d, s)
        return d
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def adjugate_det(m) -> tuple[list[list[int]], int]:
    """Return ``(adj, det)`` for a square integer matrix.

    Fraction-free Gauss-Jordan on ``[m | I]``: after elimination the left block
    is ``p * I`` and the right block is ``p * m^-1`` where ``p = +-det``.
    Raises SingularMatrix when ``det = 0``.
    """
    m = as_matrix(m)
    n = m.order
    if any(isinstance(x, Fraction) and x.denominator != 1 for r in m.rows for x in r):
        raise TypeError("adjugate_det needs integer entries; use inverse_exact")
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m.rows)]
    width = 2 * n
    sign = 1
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrix("matrix is singular (det = 0)")
        pivot = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, width):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    # the right block now holds prev * m^-1 and det(m) = sign * prev
    adj = [[sign * x for x in row[n:]] for row in a]
    return adj, sign * prev


def inverse_exact(m) -> Matrix:
    """Exact rational inverse, as adjugate over determinant.

    For rational input the rows are first scaled to integers, ``D m``, and
    ``m^-1 = (D m)^-1 D``.
    """
    m = as_matrix(m)
    a, scales = _integer_rows(m)
    adj, det = adjugate_det(Matrix(a))
    return Matrix(
        [[Fraction(x * s, det) for x, s in zip(row, scales)] for row in adj]
    )


def _integer_rows(m: Matrix) -> tuple[list[list[int]], list[int]]:
    if all(type(x) is int for r in m.rows for x in r):
        return [list(r) for r in m.rows], [1] * m.nrows
    rows, scales = [], []
    for r in m.rows:
        s = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        rows.append([int(x * s) for x in r])
        scales.append(s)
    return rows, scales


def mat_mul(a, b) -> Matrix:
    a, b = as_matrix(a), as_matrix(b)
    if a.ncols != b.nrows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    cols = list(zip(*b.rows))
    return Matrix([[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a.rows])


def mat_vec(a, v: Sequence) -> list:
    a = as_matrix(a)
    if a.ncols != len(v):
        raise DimensionMismatch(f"cannot multiply {a.shape} by vector of length {len(v)}")
    return [sum(x * y for x, y in zip(r, v)) for r in a.rows]


def is_identity(m) -> bool:
    m = as_matrix(m)
    return m.is_square and all(
        m.rows[i][j] == (i == j) for i in range(m.nrows) for j in range(m.ncols)
    )
