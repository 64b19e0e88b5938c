"""Passage between +-1 matrices of order n+1 and 0/1 matrices of order n.

Forward: negate every column of U that starts with -1, then every row that
starts with -1, giving V with a first row and first column of ones; drop them
and map the remaining block by 1 -> 0, -1 -> 1.  The determinant scales as
``|det T| = |det U| / 2^n``.  (Geometrically this is the affine map
x -> (1 - x)/2 from [-1, 1]^n onto [0, 1]^n; it is not exposed separately.)
"""

from __future__ import annotations

from typing import NamedTuple

from .exact import Matrix01, MatrixPM1, det_exact


def normalize_pm1(u) -> MatrixPM1:
    """Columns first, then rows, exactly in that order."""
    u = u if isinstance(u, MatrixPM1) else MatrixPM1(u)
    col_sign = u.rows[0]
    rows = [[x * s for x, s in zip(r, col_sign)] for r in u.rows]
    rows = [[x * r[0] for x in r] for r in rows]
    return MatrixPM1(rows)


def pm1_to_01(u) -> Matrix01:
    """0/1 matrix of order n from a +-1 matrix of order n+1 (n >= 1)."""
    v = normalize_pm1(u)
    if v.order < 2:
        raise ValueError("need a +-1 matrix of order >= 2")
    return Matrix01([[(1 - x) // 2 for x in r[1:]] for r in v.rows[1:]])


def zero_one_to_pm1(t) -> MatrixPM1:
    """Bordered +-1 matrix V of order n+1 with ``|det V| = 2^n |det t|``."""
    t = t if isinstance(t, Matrix01) else Matrix01(t)
    n = t.order
    return MatrixPM1([[1] * (n + 1)] + [[1] + [1 - 2 * x for x in r] for r in t.rows])


class DetRatioCheck(NamedTuple):
    lhs: int  # 2^n * |det T|
    rhs: int  # |det U|
    holds: bool


def check_theorem2(u) -> DetRatioCheck:
    u = u if isinstance(u, MatrixPM1) else MatrixPM1(u)
    n = u.order - 1
    lhs = 2**n * abs(det_exact(pm1_to_01(u)))
    rhs = abs(det_exact(u))
    return DetRatioCheck(lhs, rhs, lhs == rhs)
