"""Bottleneck distance between interval decomposable modules.

Feasibility of a threshold ``δ`` is a perfect-matching question on the
usual augmented bipartite graph: each summand may be matched to a summand on
the other side within ``δ``, or to its own dummy copy if it is trivial at
``δ``; dummies match each other freely.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .extreal import INF, is_finite, to_scalar
from .interleaving import interleaving_distance
from .interval import trivial_threshold

__all__ = [
    "DistanceMatrix",
    "BottleneckResult",
    "pairwise_matrix",
    "delta_matched",
    "matching_at",
    "bottleneck_distance",
    "bottleneck",
]

THREADS_ENV = "PERSISTDIST_THREADS"


class DistanceMatrix(NamedTuple):
    entries: tuple  # entries[i][j] = d_I(M_i, N_j)
    row_triv: tuple
    col_triv: tuple

    @property
    def shape(self):
        return len(self.row_triv), len(self.col_triv)


class BottleneckResult(NamedTuple):
    distance: object
    matching: tuple  # (i, j) pairs
    unmatched_left: tuple
    unmatched_right: tuple


def _thread_count():
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pairwise_matrix(ms, ns) -> DistanceMatrix:
    ms, ns = list(ms), list(ns)
    pairs = [(a, b) for a in ms for b in ns]
    workers = _thread_count()
    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(lambda ab: interleaving_distance(*ab), pairs))
    else:
        flat = [interleaving_distance(a, b) for a, b in pairs]
    n = len(ns)
    entries = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(len(ms)))
    return DistanceMatrix(
        entries,
        tuple(trivial_threshold(a) for a in ms),
        tuple(trivial_threshold(b) for b in ns),
    )


def _graph(matrix: DistanceMatrix, delta):
    # left: M_0..M_{m-1}, then dummies of N_0..N_{n-1}
    # right: N_0..N_{n-1}, then dummies of M_0..M_{m-1}
    m, n = matrix.shape
    rows, cols = [], []
    for i in range(m):
        for j in range(n):
            if matrix.entries[i][j] <= delta:
                rows.append(i)
                cols.append(j)
        if matrix.row_triv[i] <= delta:
            rows.append(i)
            cols.append(n + i)
    for j in range(n):
        if matrix.col_triv[j] <= delta:
            rows.append(m + j)
            cols.append(j)
        for i in range(m):
            rows.append(m + j)
            cols.append(n + i)
    size = m + n
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(size, size))


def matching_at(matrix: DistanceMatrix, delta):
    """A ``delta``-matching as ``(pairs, unmatched_left, unmatched_right)``, or ``None``."""
    m, n = matrix.shape
    if m + n == 0:
        return (), (), ()
    match = maximum_bipartite_matching(_graph(matrix, delta), perm_type="column")
    if (match < 0).any():
        return None
    pairs, lonely_left = [], []
    for i in range(m):
        j = int(match[i])
        if j < n:
            pairs.append((i, j))
        else:
            lonely_left.append(i)
    matched_right = {j for _, j in pairs}
    lonely_right = tuple(j for j in range(n) if j not in matched_right)
    return tuple(pairs), tuple(lonely_left), lonely_right


def delta_matched(matrix: DistanceMatrix, delta) -> bool:
    return matching_at(matrix, to_scalar(delta)) is not None


def bottleneck(ms, ns, matrix: DistanceMatrix | None = None) -> BottleneckResult:
    """Bottleneck distance together with a witnessing matching."""
    if matrix is None:
        matrix = pairwise_matrix(ms, ns)
    cands = {0}
    for row in matrix.entries:
        cands.update(row)
    cands.update(matrix.row_triv)
    cands.update(matrix.col_triv)
    cands = sorted(c for c in cands if is_finite(c))
    lo, hi = 0, len(cands)
    while lo < hi:
        mid = (lo + hi) // 2
        if matching_at(matrix, cands[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    if lo == len(cands):
        witness = matching_at(matrix, INF)
        return BottleneckResult(INF, *witness)
    return BottleneckResult(to_scalar(cands[lo]), *matching_at(matrix, cands[lo]))


def bottleneck_distance(ms, ns):
    return bottleneck(ms, ns).distance
