"""Row-sum test on the inverse of a bordered 0/1 matrix.

For a nonsingular 0/1 matrix M of order n let A be M bordered by a column of
ones and the row (0, ..., 0, 1), and l_ij the entries of A^-1.  Every row sum
``s_i = sum_j |l_ij|`` (i <= n) is at least 2; if |det M| is the maximum 0/1
determinant of order n, all of them equal 2.  A single s_i > 2 therefore
proves |det M| is not maximal.  All s_i = 2 proves nothing: the identity
matrix passes for every n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateSimplex, InternalError, SingularMatrix
from .exact import Matrix01
from .simplex import LagrangeData, border_01, lagrange_data


class VerdictKind(str, enum.Enum):
    NOT_MAXIMAL = "NotMaximal"
    NECESSARY_CONDITION_HOLDS = "NecessaryConditionHolds"

    def __str__(self):
        return self.value


def decimal4(x: Fraction) -> str:
    """Round half to even at 4 places; display only, never compared."""
    q = round(Fraction(x) * 10000)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(abs(q), 10000)
    return f"{sign}{whole}.{frac:04d}"


@dataclass(frozen=True)
class RowSums:
    order: int
    sums: tuple[Fraction, ...]

    @property
    def decimals(self) -> tuple[str, ...]:
        return tuple(decimal4(s) for s in self.sums)


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness_rows: tuple[int, ...]
    det_value: int
    sums: RowSums

    @property
    def not_maximal(self) -> bool:
        return self.kind is VerdictKind.NOT_MAXIMAL


def row_abs_sums(L: LagrangeData) -> RowSums:
    """``s_i = sum_{j=1}^{n+1} |l_ij|`` for i = 1..n; the last row is skipped."""
    n = L.order
    sums = tuple(sum((abs(x) for x in L.row(i)), Fraction(0)) for i in range(n))
    return RowSums(order=n, sums=sums)


def verdict_from_sums(sums: RowSums, det_value: int) -> Verdict:
    low = [i + 1 for i, s in enumerate(sums.sums) if s < 2]
    if low:
        raise InternalError(
            f"row sums below 2 in rows {low}: impossible for a nonsingular 0/1 matrix"
        )
    witnesses = tuple(i + 1 for i, s in enumerate(sums.sums) if s > 2)
    kind = VerdictKind.NOT_MAXIMAL if witnesses else VerdictKind.NECESSARY_CONDITION_HOLDS
    return Verdict(kind=kind, witness_rows=witnesses, det_value=det_value, sums=sums)


def certify_01(m) -> Verdict:
    """Certify non-maximality of ``|det m|`` among 0/1 matrices of the same order.

    Witness rows are 1-based and ascending.  Raises SingularMatrix if det m = 0.
    """
    m = m if isinstance(m, Matrix01) else Matrix01(m)
    try:
        L = lagrange_data(border_01(m))
    except DegenerateSimplex:
        raise SingularMatrix("0/1 matrix is singular; the row-sum test needs det != 0") from None
    return verdict_from_sums(row_abs_sums(L), L.det)
