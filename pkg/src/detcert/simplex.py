"""Node matrices of simplices and their basic Lagrange polynomials.

A simplex with vertices ``x^(1), ..., x^(n+1)`` in R^n is encoded by its node
matrix: row ``j`` is ``(x^(j)_1, ..., x^(j)_n, 1)``.  Column ``j`` of the
inverse holds the coefficients of the linear polynomial ``lambda_j`` with
``lambda_j(x^(k)) = [j == k]``, so ``lambda(x)`` is the vector of barycentric
coordinates of ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateSimplex, DimensionMismatch, SingularMatrix
from .exact import Matrix, Matrix01, adjugate_det, det_exact, inverse_exact


class NodeMatrix(Matrix):
    """Square matrix of order n+1 whose last column is all ones."""

    __slots__ = ()

    def _check_entries(self):
        if not self.is_square or self.nrows < 2:
            raise DimensionMismatch(f"node matrix must be square of order >= 2, got {self.shape}")
        if any(r[-1] != 1 for r in self.rows):
            raise ValueError("node matrix must have a last column of ones")

    @property
    def dim(self) -> int:
        """Dimension n of the simplex (the order is n+1)."""
        return self.nrows - 1

    @property
    def vertices(self) -> list[tuple]:
        return [r[:-1] for r in self.rows]


def border_01(m) -> NodeMatrix:
    """Append the row ``(0, ..., 0, 1)`` and a column of ones to a 0/1 matrix.

    Vertex j (1 <= j <= n) of the resulting simplex is row j of ``m``; vertex
    n+1 is the origin.
    """
    m = m if isinstance(m, Matrix01) else Matrix01(m)
    n = m.order
    return NodeMatrix([r + (1,) for r in m.rows] + [(0,) * n + (1,)])


def node_from_vertices(vertices: Sequence[Sequence]) -> NodeMatrix:
    verts = [tuple(v) for v in vertices]
    if not verts:
        raise DimensionMismatch("need at least two vertices")
    n = len(verts) - 1
    for v in verts:
        if len(v) != n:
            raise DimensionMismatch(
                f"{n + 1} vertices need {n} coordinates each, got {len(v)}"
            )
    return NodeMatrix([v + (1,) for v in verts])


@dataclass(frozen=True)
class LagrangeData:
    """Inverse of a node matrix; ``coeffs[i][j]`` is l_ij (0-based here)."""

    order: int
    coeffs: Matrix
    node: NodeMatrix
    det: int | Fraction

    @property
    def vertices(self) -> list[tuple]:
        return self.node.vertices

    def row(self, i: int) -> tuple:
        return self.coeffs.rows[i]


def lagrange_data(a) -> LagrangeData:
    a = a if isinstance(a, NodeMatrix) else NodeMatrix(a)
    try:
        if all(type(x) is int for r in a.rows for x in r):
            adj, det = adjugate_det(a)
            coeffs = Matrix([[Fraction(x, det) for x in r] for r in adj])
        else:
            coeffs = inverse_exact(a)
            det = None
    except SingularMatrix:
        raise DegenerateSimplex("simplex has zero volume (det of node matrix is 0)") from None
    if det is None:
        det = det_exact(a)
    return LagrangeData(order=a.dim, coeffs=coeffs, node=a, det=det)


def barycentric_at(L: LagrangeData, x: Sequence) -> list[Fraction]:
    """Values ``(lambda_1(x), ..., lambda_{n+1}(x))``."""
    n = L.order
    if len(x) != n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, simplex dimension is {n}")
    point = list(x) + [1]
    cols = zip(*L.coeffs.rows)
    return [sum((c * p for c, p in zip(col, point)), Fraction(0)) for col in cols]


def contains(L: LagrangeData, x: Sequence) -> bool:
    return all(v >= 0 for v in barycentric_at(L, x))


def centroid(vertices: Sequence[Sequence]) -> tuple[Fraction, ...]:
    k = len(vertices)
    return tuple(Fraction(sum(c), k) for c in zip(*vertices))
