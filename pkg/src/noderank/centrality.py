"""The four classical baseline centralities: DC, BC, CC, EC.

Conventions, chosen so scores read as fractions of a perfect hub:

* degree centrality     DC(i) = deg(i) / (N-1)
* betweenness           Brandes accumulation, endpoints excluded,
                        divided by (N-1)(N-2)/2 so a star center scores 1
* closeness             reachable-count composite
                        CC(i) = (r_i/(N-1)) * (r_i / sum_j d(i,j)),
                        which reduces to (N-1)/sum_j d(i,j) on connected
                        graphs and degrades gracefully on disconnected ones
* eigenvector           power iteration on the adjacency operator,
                        normalized to unit maximum entry

Ranking ties are always broken by ascending node index so top-k lists are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateGraphError, NoConvergenceError
from .graph import Graph

__all__ = [
    "CentralityVector",
    "degree_centrality",
    "betweenness_centrality",
    "closeness_centrality",
    "eigenvector_centrality",
    "eigenvector_centrality_robust",
    "rank_order",
]

EC_RETRY_DAMPING = 1e-3


@dataclass(frozen=True)
class CentralityVector:
    measure: str
    values: np.ndarray
    normalization: str


def rank_order(values: np.ndarray) -> np.ndarray:
    """Indices sorted by descending value, ties by ascending index."""
    values = np.asarray(values)
    return np.lexsort((np.arange(values.shape[0]), -values))


def degree_centrality(g: Graph) -> CentralityVector:
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"degree centrality undefined for N={n}")
    values = g.degrees.astype(np.float64) / (n - 1)
    return CentralityVector("DC", values, "deg/(N-1)")


def betweenness_centrality(g: Graph) -> CentralityVector:
    n = g.node_count
    if n < 3:
        raise DegenerateGraphError(f"betweenness undefined for N={n}")
    raw = _kernels.brandes_betweenness(g.indptr, g.indices)
    values = raw / ((n - 1) * (n - 2) / 2.0)
    return CentralityVector("BC", values, "pairs/(N-1)(N-2)/2, endpoints excluded")


def closeness_centrality(g: Graph) -> CentralityVector:
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"closeness undefined for N={n}")
    weights = np.zeros(n, dtype=np.float64)
    sources = np.arange(n, dtype=np.int64)
    sum_d, reach, _, _ = _kernels.distance_sweep(g.indptr, g.indices, weights, sources)
    values = np.zeros(n, dtype=np.float64)
    ok = sum_d > 0
    r = reach.astype(np.float64)
    values[ok] = (r[ok] / (n - 1)) * (r[ok] / sum_d[ok])
    return CentralityVector("CC", values, "reachable-count composite")


def eigenvector_centrality(
    g: Graph,
    tol: float = 1e-12,
    max_iter: int = 1000,
    damping: float = 0.0,
) -> CentralityVector:
    """Principal-eigenvector scores via power iteration from the uniform vector.

    Iterates x <- A x (+ damping * x), renormalizing to unit max entry, and
    stops when successive iterates differ by less than ``tol`` in the max
    norm.  On bipartite-like structures the undamped iteration oscillates
    between the two sides and this raises :class:`NoConvergenceError`;
    retry with a small positive ``damping`` (which shifts the spectrum
    without changing eigenvectors) or use
    :func:`eigenvector_centrality_robust`.
    """
    n = g.node_count
    if g.edge_count < 1:
        raise DegenerateGraphError("eigenvector centrality needs at least one edge")
    x = np.full(n, 1.0 / n, dtype=np.float64)
    y = np.empty(n, dtype=np.float64)
    for _ in range(max_iter):
        _kernels.csr_matvec(g.indptr, g.indices, x, y)
        if damping:
            y += damping * x
        top = y.max()
        if top <= 0:
            # only isolated nodes fed the iteration; treat as degenerate
            raise DegenerateGraphError("adjacency operator collapsed the iterate to zero")
        y /= top
        if np.max(np.abs(y - x)) < tol:
            return CentralityVector("EC", y.copy(), "max entry = 1")
        x, y = y, x
    raise NoConvergenceError(max_iter)


def eigenvector_centrality_robust(
    g: Graph,
    tol: float = 1e-12,
    max_iter: int = 1000,
    retry_iter: int = 200_000,
) -> CentralityVector:
    """Undamped first, damped retry on oscillation.

    The damped pass uses A + eps*I with eps = 1e-3, which has the same
    eigenvectors as A but breaks the +/- lambda symmetry that makes power
    iteration cycle on bipartite components.  The retry budget is large
    because the post-shift spectral gap is only ~2*eps.
    """
    try:
        return eigenvector_centrality(g, tol=tol, max_iter=max_iter)
    except NoConvergenceError:
        return eigenvector_centrality(g, tol=tol, max_iter=retry_iter, damping=EC_RETRY_DAMPING)
