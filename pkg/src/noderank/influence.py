"""Coreness-based global influence, DEMATEL relation analysis, and fusion.

Three layers, composable but independently usable:

1. GSM scores.  Each node gets a self term from its own coreness,
   ``SI(i) = exp(ks(i) / N)``, and a global term accumulated from every
   reachable node's coreness discounted by hop distance,
   ``GI(i) = sum_{j != i} ks(j) / d(i, j)``.  The product ``SI * GI`` is
   the GSM score.  Nodes in rich cores that sit close to everything score
   high; isolated nodes score 0.

2. DEMATEL.  The binary adjacency matrix is taken as the direct-relation
   matrix A, scaled by ``s = (1 + eps) * max(max row sum, max col sum)``
   so the normalized ``X = A/s`` has spectral radius < 1 (guaranteed by
   the Perron bound; the (1+eps) inflation matters on regular graphs,
   where the plain max-row-sum scaling makes I - X exactly singular).
   The total-relation matrix ``T = X (I - X)^{-1}`` then adds up direct
   and all indirect influence chains.  Row sums D (dispatch), column sums
   R (receive), prominence D+R and net relation D-R summarize each node.

3. Fusion.  A convex combination of the min-max-normalized GSM score and
   DEMATEL prominence, ``alpha * gsm_hat + (1 - alpha) * prominence_hat``,
   ranked descending with ascending-index tie-breaks.

DEMATEL is dense O(N^2) memory / O(N^3) solve and refuses graphs beyond
``DEMATEL_MAX_NODES`` (raise the fusion weight to 1 to stay GSM-only on
bigger graphs).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality_robust,
    rank_order,
)
from .errors import (
    DegenerateGraphError,
    IllConditionedError,
    MatrixTooLargeError,
    SizeMismatchError,
    ZeroMatrixError,
)
from .graph import Graph
from .metrics import k_shell

__all__ = [
    "GsmScores",
    "DematelResult",
    "FusedRanking",
    "DEMATEL_MAX_NODES",
    "MEASURES",
    "gsm_scores",
    "dematel_direct",
    "dematel_total",
    "total_relation",
    "fused_ranking",
    "measure_scores",
    "rank_by",
    "minmax_normalize",
]

DEMATEL_MAX_NODES = 5_000
SOLVE_RESIDUAL_TOL = 1e-8

MEASURES = ("dc", "bc", "cc", "ec", "kshell", "gsm", "dematel", "fused")


@dataclass(frozen=True)
class GsmScores:
    self_influence: np.ndarray   # exp(ks/N), always >= 1
    global_influence: np.ndarray  # sum of ks(j)/d(i,j) over reachable j
    gsm: np.ndarray              # elementwise product


@dataclass(frozen=True)
class DematelResult:
    direct: np.ndarray
    scale: float
    total: np.ndarray
    dispatch: np.ndarray    # row sums of T
    receive: np.ndarray     # column sums of T
    prominence: np.ndarray  # D + R
    relation: np.ndarray    # D - R


@dataclass(frozen=True)
class FusedRanking:
    alpha: float
    fused: np.ndarray
    order: np.ndarray


def gsm_scores(g: Graph, shells: np.ndarray | None = None) -> GsmScores:
    """GSM influence from coreness and hop distances (formulas above)."""
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"GSM undefined for N={n}")
    ks = k_shell(g) if shells is None else np.asarray(shells, dtype=np.int64)
    if ks.shape[0] != n:
        raise SizeMismatchError(f"shell vector has {ks.shape[0]} entries for {n} nodes")
    si = np.exp(ks / n)
    sources = np.arange(n, dtype=np.int64)
    _, _, _, gi = _kernels.distance_sweep(g.indptr, g.indices, ks.astype(np.float64), sources)
    return GsmScores(self_influence=si, global_influence=gi, gsm=si * gi)


def dematel_direct(g: Graph) -> np.ndarray:
    """Binary adjacency as the direct-relation matrix (zero diagonal)."""
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"DEMATEL undefined for N={n}")
    if n > DEMATEL_MAX_NODES:
        raise MatrixTooLargeError(
            f"{n} nodes exceeds the dense cap of {DEMATEL_MAX_NODES}"
        )
    a = np.zeros((n, n), dtype=np.float64)
    rows = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    a[rows, g.indices] = 1.0
    return a


def total_relation(x: np.ndarray) -> np.ndarray:
    """T = X (I - X)^(-1) for an already-normalized X with rho(X) < 1.

    Solved densely as T (I - X) = X; raises IllConditionedError when the
    max-norm residual of (I - X) T - X exceeds SOLVE_RESIDUAL_TOL.
    """
    n = x.shape[0]
    eye = np.eye(n)
    t = np.linalg.solve((eye - x).T, x.T).T
    residual = np.abs((eye - x) @ t - x).sum(axis=1).max()
    if residual > SOLVE_RESIDUAL_TOL:
        raise IllConditionedError(f"total-relation solve residual {residual:.3e}")
    return t


def dematel_total(a: np.ndarray, epsilon: float = 1e-6) -> DematelResult:
    """Full DEMATEL pipeline from a nonnegative direct-relation matrix.

    ``epsilon`` inflates the normalization scale so I - X is provably
    invertible; 1e-6 perturbs T negligibly while covering regular graphs.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SizeMismatchError(f"direct matrix must be square, got {a.shape}")
    if a.shape[0] > DEMATEL_MAX_NODES:
        raise MatrixTooLargeError(
            f"{a.shape[0]} nodes exceeds the dense cap of {DEMATEL_MAX_NODES}"
        )
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if a.min() < 0:
        raise ValueError("direct matrix must be nonnegative")
    bound = max(a.sum(axis=1).max(), a.sum(axis=0).max())
    if bound == 0:
        raise ZeroMatrixError("direct-relation matrix is identically zero")
    s = (1.0 + epsilon) * bound
    x = a / s
    t = total_relation(x)
    d = t.sum(axis=1)
    r = t.sum(axis=0)
    return DematelResult(
        direct=a,
        scale=s,
        total=t,
        dispatch=d,
        receive=r,
        prominence=d + r,
        relation=d - r,
    )


def minmax_normalize(values: np.ndarray) -> np.ndarray:
    """Affine map onto [0, 1]; constant vectors map to all-zeros, not NaN."""
    values = np.asarray(values, dtype=np.float64)
    lo = values.min()
    hi = values.max()
    if hi == lo:
        return np.zeros_like(values)
    return (values - lo) / (hi - lo)


def fused_ranking(gsm: GsmScores, dem: DematelResult, alpha: float = 0.5) -> FusedRanking:
    """Convex combination of normalized GSM and DEMATEL prominence."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if gsm.gsm.shape[0] != dem.prominence.shape[0]:
        raise SizeMismatchError(
            f"GSM has {gsm.gsm.shape[0]} nodes, DEMATEL has {dem.prominence.shape[0]}"
        )
    fused = alpha * minmax_normalize(gsm.gsm) + (1.0 - alpha) * minmax_normalize(dem.prominence)
    return FusedRanking(alpha=alpha, fused=fused, order=rank_order(fused))


def _fused_scores(g: Graph, alpha: float) -> np.ndarray:
    if alpha == 1.0:  # GSM-only: skip the dense solve entirely
        return minmax_normalize(gsm_scores(g).gsm)
    dem = dematel_total(dematel_direct(g))
    if alpha == 0.0:
        return minmax_normalize(dem.prominence)
    return fused_ranking(gsm_scores(g), dem, alpha).fused


def measure_scores(measure: str, g: Graph, alpha: float = 0.5) -> np.ndarray:
    """Per-node scores under any supported measure (names in MEASURES)."""
    m = measure.lower()
    if m == "dc":
        return degree_centrality(g).values
    if m == "bc":
        return betweenness_centrality(g).values
    if m == "cc":
        return closeness_centrality(g).values
    if m == "ec":
        return eigenvector_centrality_robust(g).values
    if m == "kshell":
        return k_shell(g).astype(np.float64)
    if m == "gsm":
        return gsm_scores(g).gsm
    if m == "dematel":
        return dematel_total(dematel_direct(g)).prominence
    if m == "fused":
        return _fused_scores(g, alpha)
    raise ValueError(f"unknown measure {measure!r}; pick one of {MEASURES}")


def rank_by(measure: str, g: Graph, alpha: float = 0.5) -> np.ndarray:
    """Full descending node ranking under any supported measure.

    Measure names (case-insensitive): dc, bc, cc, ec, kshell, gsm,
    dematel, fused.  Ties always break by ascending node index.
    """
    return rank_order(measure_scores(measure, g, alpha))
