"""Simplex-in-cube quantities computed exactly from Lagrange data.

Axis indices ``i`` follow the usual mathematical convention and run from 1 to
n.  Everything is returned as ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .simplex import LagrangeData


def _abs_row_sum(row) -> Fraction:
    return sum((abs(x) for x in row), Fraction(0))


def axial_diameters(L: LagrangeData) -> list[Fraction]:
    """Length of the longest segment in S parallel to each coordinate axis.

    ``d_i = 2 / sum_j |l_ij|``.  The sum is positive because row i of an
    invertible matrix cannot vanish.
    """
    return [2 / _abs_row_sum(L.row(i)) for i in range(L.order)]


def segment_weights(L: LagrangeData) -> list[list[Fraction]]:
    """``m_ij = |l_ij| / sum_k |l_ik|``, one row per axis; each row sums to 1."""
    weights = []
    for i in range(L.order):
        row = L.row(i)
        total = _abs_row_sum(row)
        weights.append([abs(x) / total for x in row])
    return weights


def _check_axis(L, i):
    if not 1 <= i <= L.order:
        raise DimensionMismatch(f"axis index {i} outside 1..{L.order}")


def segment_center(L: LagrangeData, vertices: Sequence[Sequence] | None, i: int) -> tuple[Fraction, ...]:
    """Midpoint of the longest axis-``i`` segment, ``sum_j m_ij x^(j)``."""
    _check_axis(L, i)
    verts = L.vertices if vertices is None else vertices
    if len(verts) != L.order + 1:
        raise DimensionMismatch(f"expected {L.order + 1} vertices, got {len(verts)}")
    row = L.row(i - 1)
    total = _abs_row_sum(row)
    w = [abs(x) / total for x in row]
    return tuple(
        sum((wj * v[k] for wj, v in zip(w, verts)), Fraction(0)) for k in range(L.order)
    )


def segment_endpoints(L: LagrangeData, vertices, i: int):
    """The two endpoints ``c^(i) -+ (d_i / 2) e_i`` of the longest axis-``i`` segment."""
    c = segment_center(L, vertices, i)
    half = 1 / _abs_row_sum(L.row(i - 1))
    lo, hi = list(c), list(c)
    lo[i - 1] -= half
    hi[i - 1] += half
    return tuple(lo), tuple(hi)


def alpha_of(L: LagrangeData) -> Fraction:
    """Smallest homothety ratio for which a translate of sigma*S holds Q_n."""
    return sum((_abs_row_sum(L.row(i)) for i in range(L.order)), Fraction(0)) / 2


def _vertex_extremes(L: LagrangeData):
    # Over x in {0,1}^n, lambda_j(x) = l_{n+1,j} + sum_i l_ij x_i is extremised
    # coordinate-wise: pick x_i = 1 exactly when that helps.
    n = L.order
    cols = list(zip(*L.coeffs.rows))
    mins, maxneg = [], []
    for col in cols:
        const = col[n]
        mins.append(const + sum(min(0, x) for x in col[:n]))
        maxneg.append(-const + sum(max(0, -x) for x in col[:n]))
    return mins, maxneg


def cube_contained(L: LagrangeData) -> bool:
    """True when every vertex of Q_n has all barycentric coordinates >= 0."""
    mins, _ = _vertex_extremes(L)
    return all(m >= 0 for m in mins)


def xi_of(L: LagrangeData) -> Fraction:
    """Smallest sigma >= 1 with Q_n inside sigma*S (centroid homothety).

    ``(n+1) * max_j max_{x in ver(Q_n)} (-lambda_j(x)) + 1``, with the inner
    maximum taken in closed form; 1 when Q_n is already inside S.
    """
    if cube_contained(L):
        return Fraction(1)
    _, maxneg = _vertex_extremes(L)
    return (L.order + 1) * max(maxneg) + 1


@dataclass(frozen=True)
class GeometryReport:
    axial_diameters: tuple[Fraction, ...]
    alpha: Fraction
    xi: Fraction
    segment_centers: tuple[tuple[Fraction, ...], ...]
    weights: tuple[tuple[Fraction, ...], ...]


def geometry_report(L: LagrangeData, vertices=None) -> GeometryReport:
    n = L.order
    return GeometryReport(
        axial_diameters=tuple(axial_diameters(L)),
        alpha=alpha_of(L),
        xi=xi_of(L),
        segment_centers=tuple(segment_center(L, vertices, i) for i in range(1, n + 1)),
        weights=tuple(tuple(r) for r in segment_weights(L)),
    )
