"""Exact certificates of non-maximality for 0/1 and +-1 determinants."""

__version__ = "0.1.0"

from .certify import RowSums, Verdict, VerdictKind, certify_01, row_abs_sums
from .errors import (
    BadSymbol,
    DegenerateSimplex,
    DetcertError,
    DimensionMismatch,
    InternalError,
    NonSquare,
    OrderTooLarge,
    ParseError,
    SingularMatrix,
)
from .exact import Matrix, Matrix01, MatrixPM1, det_exact, inverse_exact, mat_mul
from .geometry import (
    GeometryReport,
    alpha_of,
    axial_diameters,
    geometry_report,
    segment_center,
    xi_of,
)
from .search import SearchResult, brute_force_g, brute_force_h, simplex_from_maxdet
from .simplex import LagrangeData, NodeMatrix, barycentric_at, border_01, lagrange_data, node_from_vertices
from .transform import check_theorem2, normalize_pm1, pm1_to_01, zero_one_to_pm1
