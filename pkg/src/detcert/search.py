"""Exhaustive maximum-determinant search at small orders.

Matrices are enumerated row by row.  For every prefix of k rows we keep all
k x k minors (one per k-subset of columns); appending a row extends them by
Laplace expansion along that row, and the last row is a single dot product
with the cofactor vector.  Everything below the final re-verification runs on
int64 numpy arrays; orders handled here keep every minor far below 2^62.

Enumeration order is the row-major bit string of the matrix read as a binary
number, first entry most significant.  For +-1 matrices the first row and
column are fixed to ones (row and column negations preserve |det|) and only
the interior is enumerated, with bit 1 standing for -1.  The witness is the
maximizer with the smallest index, so results do not depend on how the index
range is split among workers.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np

from .errors import InternalError, OrderTooLarge, SingularMatrix
from .exact import Matrix01, MatrixPM1, det_exact

log = logging.getLogger(__name__)

MAX_ORDER_01 = 5
MAX_ORDER_01_OPTIONAL = 6
MAX_ORDER_PM1 = 6

# largest determinant block materialised per work item
_BLOCK = 1 << 20


@dataclass(frozen=True)
class SearchResult:
    order: int
    kind: str  # "01" or "pm1"
    max_abs_det: int
    witness: Matrix01 | MatrixPM1
    count_maximizers: int
    enumerated: int
    maximizer_indices: tuple[int, ...] | None = field(default=None, repr=False, compare=False)


class _Space:
    """Index space of one search: fixed leading rows plus free rows from an alphabet."""

    def __init__(self, kind: str, n: int):
        self.kind = kind
        self.n = n
        if kind == "01":
            self.fixed = np.zeros((0, n), dtype=np.int64)
            codes = np.arange(1 << n, dtype=np.int64)
            bits = (codes[:, None] >> np.arange(n - 1, -1, -1)) & 1
            self.alphabet = bits
            self.free = n
        elif kind == "pm1":
            self.fixed = np.ones((1, n), dtype=np.int64)
            codes = np.arange(1 << (n - 1), dtype=np.int64)
            bits = (codes[:, None] >> np.arange(n - 2, -1, -1)) & 1
            self.alphabet = np.hstack([np.ones((len(codes), 1), dtype=np.int64), 1 - 2 * bits])
            self.free = n - 1
        else:
            raise ValueError(f"unknown search kind {kind!r}")
        self.K = len(self.alphabet)
        self.size = self.K**self.free
        # leading free rows fixed per work item; the rest are vectorised
        split = 0
        while split < self.free - 1 and self.K ** (self.free - split) > _BLOCK:
            split += 1
        self.split = split
        self.items = self.K**split
        self.per_item = self.K ** (self.free - split)
        self.combos = {k: list(combinations(range(n), k)) for k in range(n + 1)}
        self.index_of = {k: {c: i for i, c in enumerate(cs)} for k, cs in self.combos.items()}

    def digits(self, index: int, count: int) -> list[int]:
        out = []
        for _ in range(count):
            index, d = divmod(index, self.K)
            out.append(d)
        return out[::-1]

    def decode(self, index: int) -> list[list[int]]:
        rows = self.fixed.tolist() + [self.alphabet[d].tolist() for d in self.digits(index, self.free)]
        return rows

    def extend(self, minors: np.ndarray, k: int, rows: np.ndarray) -> np.ndarray:
        """Minors of size k (P, C(n,k)) -> size k+1 (P*len(rows), C(n,k+1))."""
        P = minors.shape[0]
        new_combos = self.combos[k + 1]
        idx = self.index_of[k]
        out = np.zeros((P, len(rows), len(new_combos)), dtype=np.int64)
        for s, S in enumerate(new_combos):
            acc = out[:, :, s]
            for p, c in enumerate(S):
                sub = idx[S[:p] + S[p + 1:]]
                sign = -1 if (k + p) % 2 else 1
                acc += sign * minors[:, sub][:, None] * rows[:, c][None, :]
        return out.reshape(P * len(rows), len(new_combos))

    def item_dets(self, item: int) -> np.ndarray:
        """Signed determinants of every matrix in one work item, in index order."""
        n = self.n
        minors = np.ones((1, 1), dtype=np.int64)
        k = 0
        prefix = [self.fixed[i:i + 1] for i in range(len(self.fixed))]
        prefix += [self.alphabet[d:d + 1] for d in self.digits(item, self.split)]
        for row in prefix:
            minors = self.extend(minors, k, row)
            k += 1
        remaining = self.free - self.split
        if remaining == 0:
            return minors[:, 0]
        for _ in range(remaining - 1):
            minors = self.extend(minors, k, self.alphabet)
            k += 1
        full = tuple(range(n))
        idx = self.index_of[n - 1]
        cof = np.empty((minors.shape[0], n), dtype=np.int64)
        for c in range(n):
            sign = -1 if (n - 1 + c) % 2 else 1
            cof[:, c] = sign * minors[:, idx[full[:c] + full[c + 1:]]]
        return (cof @ self.alphabet.T).ravel()


def _scan(kind: str, n: int, lo: int, hi: int, collect: bool):
    """Reduce work items lo..hi-1 to (max, count, first index, maximizer indices)."""
    space = _Space(kind, n)
    best, count, first, hits = -1, 0, None, []
    for item in range(lo, hi):
        dets = np.abs(space.item_dets(item))
        mx = int(dets.max())
        if mx < best:
            continue
        where = np.flatnonzero(dets == mx)
        base = item * space.per_item
        if mx > best:
            best, count, first, hits = mx, 0, base + int(where[0]), []
        count += len(where)
        if collect:
            hits.append(where + base)
    indices = np.concatenate(hits).tolist() if collect and hits else []
    return best, count, first, indices


def _reduce(parts):
    best = max(p[0] for p in parts)
    winners = [p for p in parts if p[0] == best]
    count = sum(p[1] for p in winners)
    first = min(p[2] for p in winners)
    indices = sorted(i for p in winners for i in p[3])
    return best, count, first, indices


def default_workers() -> int:
    env = os.environ.get("DETCERT_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def _search(kind: str, n: int, workers: int | None, collect: bool) -> SearchResult:
    space = _Space(kind, n)
    workers = default_workers() if workers is None else max(1, int(workers))
    # static contiguous partition of the work items
    bounds = [space.items * w // workers for w in range(workers + 1)]
    chunks = [(bounds[w], bounds[w + 1]) for w in range(workers) if bounds[w] < bounds[w + 1]]
    log.debug("search %s n=%d: %d items over %d chunks", kind, n, space.items, len(chunks))
    if len(chunks) == 1:
        parts = [_scan(kind, n, *chunks[0], collect)]
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [pool.submit(_scan, kind, n, lo, hi, collect) for lo, hi in chunks]
            parts = [f.result() for f in futures]
    best, count, first, indices = _reduce(parts)

    rows = space.decode(first)
    witness = Matrix01(rows) if kind == "01" else MatrixPM1(rows)
    exact = abs(det_exact(witness))
    if exact != best:
        raise InternalError(f"fast determinant {best} disagrees with exact {exact}")
    if kind == "pm1":
        # each normalised matrix stands for 2^(2n-1) distinct +-1 matrices
        count <<= 2 * n - 1
    return SearchResult(
        order=n,
        kind=kind,
        max_abs_det=exact,
        witness=witness,
        count_maximizers=count,
        enumerated=space.size,
        maximizer_indices=tuple(indices) if collect else None,
    )


def brute_force_h(n: int, workers: int | None = None, *, allow_order_6: bool = False,
                  collect: bool = False) -> SearchResult:
    """Maximum |det| over all 2^(n*n) 0/1 matrices of order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    limit = MAX_ORDER_01_OPTIONAL if allow_order_6 else MAX_ORDER_01
    if n > limit:
        raise OrderTooLarge(f"0/1 search is limited to order {limit} (got {n})")
    return _search("01", n, workers, collect)


def brute_force_g(n: int, workers: int | None = None, *, collect: bool = False) -> SearchResult:
    """Maximum |det| over all +-1 matrices of order n (normalised enumeration)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > MAX_ORDER_PM1:
        raise OrderTooLarge(f"+-1 search is limited to order {MAX_ORDER_PM1} (got {n})")
    return _search("pm1", n, workers, collect)


def decode_index(kind: str, n: int, index: int) -> Matrix01 | MatrixPM1:
    rows = _Space(kind, n).decode(index)
    return Matrix01(rows) if kind == "01" else MatrixPM1(rows)


def maximizers(result: SearchResult):
    """Yield every maximizer recorded by a search run with ``collect=True``."""
    if result.maximizer_indices is None:
        raise ValueError("search was run without collect=True")
    space = _Space(result.kind, result.order)
    cls = Matrix01 if result.kind == "01" else MatrixPM1
    for index in result.maximizer_indices:
        yield cls(space.decode(index))


def simplex_from_maxdet(m) -> tuple[list[tuple[int, ...]], Fraction]:
    """Vertices (rows of m, then the origin) and volume |det m| / n!."""
    m = m if isinstance(m, Matrix01) else Matrix01(m)
    d = det_exact(m)
    if d == 0:
        raise SingularMatrix("matrix is singular; the simplex would be degenerate")
    n = m.order
    vertices = list(m.rows) + [(0,) * n]
    return vertices, Fraction(abs(d), factorial(n))
