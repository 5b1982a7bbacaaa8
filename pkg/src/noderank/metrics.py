"""Structural metrics: density, degrees, clustering, coreness, path lengths.

Density convention
------------------
``density(g) = E / (N * (N - 1))``.  This is deliberately NOT the usual
undirected ``2E / (N(N-1))``: the toolkit reports the convention under
which a 1000-node / 3000-edge graph has density 0.003 and a 10000-node /
25000-edge graph has density 0.00025, the reference values this package
is calibrated against.  A complete graph has density 0.5 under this
convention.
"""

from __future__ import annotations


from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateGraphError
from .graph import Graph, largest_connected_component

__all__ = [
    "GraphSummary",
    "DegreeHistogram",
    "density",
    "average_degree",
    "degree_histogram",
    "local_clustering",
    "clustering_vector",
    "average_clustering",
    "k_shell",
    "bfs_distances",
    "path_stats",
    "summarize",
]

UNREACHABLE = -1

# beyond this, path statistics switch from exact all-pairs BFS to source sampling
EXACT_PATH_LIMIT = 20_000
DEFAULT_SAMPLED_SOURCES = 1_000

# discrete power-law fit: fixed lower cutoff and minimum tail size
EXPONENT_KMIN = 2
EXPONENT_MIN_TAIL = 50


@dataclass(frozen=True)
class GraphSummary:
    nodes: int
    edges: int
    density: float
    average_degree: float
    diameter: int
    average_path_length: float
    average_clustering: float
    max_k_shell: int
    path_stats_exact: bool = True


@dataclass(frozen=True)
class DegreeHistogram:
    counts: dict[int, int]
    exponent: float | None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def density(g: Graph) -> float:
    """E / (N(N-1)); see the module docstring for why not 2E/(N(N-1))."""
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"density undefined for N={n}")
    return g.edge_count / (n * (n - 1))


def average_degree(g: Graph) -> float:
    """Mean degree 2E/N."""
    n = g.node_count
    if n < 1:
        raise DegenerateGraphError("average degree undefined for the empty graph")
    return 2 * g.edge_count / n


def degree_histogram(g: Graph) -> DegreeHistogram:
    """Exact degree counts plus an advisory power-law exponent estimate.

    The exponent is the discrete maximum-likelihood estimate
    ``1 + n / sum(ln(k_i / (k_min - 0.5)))`` over degrees >= ``k_min`` (= 2).
    It is reported as None when fewer than 50 nodes qualify; the fit is
    descriptive output only, never a guarantee that a power law holds.
    """
    degs = g.degrees
    counts = dict(sorted(Counter(degs.tolist()).items()))
    tail = degs[degs >= EXPONENT_KMIN].astype(np.float64)
    if tail.shape[0] < EXPONENT_MIN_TAIL:
        return DegreeHistogram(counts=counts, exponent=None)
    alpha = 1.0 + tail.shape[0] / np.log(tail / (EXPONENT_KMIN - 0.5)).sum()
    return DegreeHistogram(counts=counts, exponent=float(alpha))


def clustering_vector(g: Graph) -> np.ndarray:
    """Local clustering coefficient 2T_i / (k_i (k_i - 1)) for every node.

    Nodes with degree < 2 get 0 by convention (the formula is 0/0 there).
    """
    n = g.node_count
    if n == 0:
        return np.zeros(0, dtype=np.float64)
    tri = _kernels.triangle_counts(g.indptr, g.indices)
    k = g.degrees.astype(np.float64)
    out = np.zeros(n, dtype=np.float64)
    mask = k >= 2
    out[mask] = 2.0 * tri[mask] / (k[mask] * (k[mask] - 1.0))
    return out


def local_clustering(g: Graph, i: int) -> float:
    g._check_index(i)
    return float(clustering_vector(g)[i])


def average_clustering(g: Graph) -> float:
    if g.node_count < 1:
        raise DegenerateGraphError("average clustering undefined for the empty graph")
    return float(clustering_vector(g).mean())


def k_shell(g: Graph) -> np.ndarray:
    """Shell index per node by iterative peeling.

    At stage k, repeatedly delete every node whose residual degree is <= k
    (assigning it shell k) until none is left, then move to stage k+1.
    """
    n = g.node_count
    shell = np.zeros(n, dtype=np.int64)
    deg = g.degrees.astype(np.int64).copy()
    alive = np.ones(n, dtype=bool)
    indptr, indices = g.indptr, g.indices
    remaining = n
    k = 0
    while remaining:
        stack = np.flatnonzero(alive & (deg <= k)).tolist()
        if not stack:
            k += 1
            continue
        while stack:
            v = stack.pop()
            if not alive[v]:
                continue
            alive[v] = False
            shell[v] = k
            remaining -= 1
            for w in indices[indptr[v]:indptr[v + 1]]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] <= k:
                        stack.append(int(w))
    return shell


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable nodes get -1."""
    g._check_index(source)
    return _kernels.bfs_distances(g.indptr, g.indices, source)


_SAMPLER_SEED = 0x5EED  # fixed so sampled estimates are reproducible


def path_stats(g: Graph, sample_sources: int | None = None) -> tuple[float, int, bool]:
    """(average path length, diameter, exact?) over the largest component.

    The average runs over ordered reachable pairs inside the LCC.  Graphs
    with more than EXACT_PATH_LIMIT nodes are estimated from a uniform
    sample of sources (diameter becomes a lower bound); the returned flag
    says which regime applied.
    """
    n = g.node_count
    if n < 2:
        raise DegenerateGraphError(f"path statistics undefined for N={n}")
    lcc = largest_connected_component(g)
    if len(lcc) < 2:
        raise DegenerateGraphError("largest component has fewer than 2 nodes")
    members = np.fromiter(sorted(lcc), count=len(lcc), dtype=np.int64)

    exact = n <= EXACT_PATH_LIMIT and sample_sources is None
    if exact:
        sources = members
    else:
        k = sample_sources or DEFAULT_SAMPLED_SOURCES
        if k >= members.shape[0]:
            sources = members
            exact = True
        else:
            rng = np.random.default_rng(_SAMPLER_SEED)
            sources = np.sort(rng.choice(members, size=k, replace=False))

    weights = np.zeros(n, dtype=np.float64)
    sum_d, reach, ecc, _ = _kernels.distance_sweep(g.indptr, g.indices, weights, sources)
    total = float(sum_d.sum())
    pairs = int(reach.sum())
    diameter = int(ecc.max())
    return total / pairs, diameter, exact


def summarize(g: Graph) -> GraphSummary:
    """One-stop structural summary used by reports."""
    apl, diam, exact = path_stats(g)
    return GraphSummary(
        nodes=g.node_count,
        edges=g.edge_count,
        density=density(g),
        average_degree=average_degree(g),
        diameter=diam,
        average_path_length=apl,
        average_clustering=average_clustering(g),
        max_k_shell=int(k_shell(g).max()) if g.node_count else 0,
        path_stats_exact=exact,
    )
