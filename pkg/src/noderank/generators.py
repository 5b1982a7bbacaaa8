"""Synthetic graph generators for the two network profiles used throughout.

``scale_free`` grows a preferential-attachment graph whose expected edge
count hits the target even when the implied mean attachment is fractional
(e.g. 25000 edges over 10000 nodes -> 2.5 edges per arriving node):
each arrival brings floor(m) edges plus one more with probability frac(m).

``uniform_random`` draws exactly ``target_edges`` distinct edges uniformly
over all node pairs, with no connectivity guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import InfeasibleSpecError
from .graph import Graph, build_graph

__all__ = ["GeneratorSpec", "generate"]

MODELS = ("scale_free", "uniform_random")


@dataclass(frozen=True)
class GeneratorSpec:
    model: str
    nodes: int
    target_edges: int
    seed: int

    def __post_init__(self):
        if self.model not in MODELS:
            raise InfeasibleSpecError(f"unknown model {self.model!r}; pick one of {MODELS}")
        if self.nodes < 2:
            raise InfeasibleSpecError(f"need at least 2 nodes, got {self.nodes}")
        max_edges = self.nodes * (self.nodes - 1) // 2
        if not 1 <= self.target_edges <= max_edges:
            raise InfeasibleSpecError(
                f"target_edges={self.target_edges} outside feasible range [1, {max_edges}] "
                f"for {self.nodes} nodes"
            )


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic for a fixed spec: same seed, same edge set."""
    if spec.model == "scale_free":
        return _preferential_attachment(spec.nodes, spec.target_edges, spec.seed)
    return _uniform_random(spec.nodes, spec.target_edges, spec.seed)


def _preferential_attachment(n: int, target: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    m0 = min(n - 1, max(2, -(-target // n)))  # ceil(target / n), at least 2 seed path nodes
    edges: list[tuple[int, int]] = [(i, i + 1) for i in range(m0 - 1)]
    if n == m0:
        g, _ = build_graph(n, np.array(edges, dtype=np.int64))
        return g

    # remaining arrivals carry mean (target - seed edges) / arrivals each
    mean_m = (target - (m0 - 1)) / (n - m0)
    if mean_m < 0:
        mean_m = 0.0
    m_lo = int(mean_m)
    frac = mean_m - m_lo

    # endpoint multiset: each node appears once per incident edge
    repeated: list[int] = []
    for u, v in edges:
        repeated.append(u)
        repeated.append(v)
    if not repeated:
        repeated = list(range(m0))

    for v in range(m0, n):
        m = m_lo + (1 if rng.random() < frac else 0)
        if m > v:
            m = v
        if m == 0:
            continue
        targets: set[int] = set()
        while len(targets) < m:
            pick = repeated[int(rng.integers(0, len(repeated)))]
            targets.add(pick)
        for t in targets:
            edges.append((v, t))
            repeated.append(v)
            repeated.append(t)

    g, report = build_graph(n, np.array(edges, dtype=np.int64))
    assert report.dropped == 0
    return g


def _uniform_random(n: int, target: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    total_pairs = n * (n - 1) // 2
    if target > total_pairs // 2 and total_pairs <= 2_000_000:
        # dense request: sample the complement instead, then keep the rest
        excluded = _sample_pairs(rng, n, total_pairs - target)
        edges = [p for p in combinations(range(n), 2) if p not in excluded]
    else:
        edges = sorted(_sample_pairs(rng, n, target))
    g, report = build_graph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    assert report.dropped == 0 and g.edge_count == target
    return g


def _sample_pairs(rng: np.random.Generator, n: int, count: int) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    while len(pairs) < count:
        # batched rejection sampling; duplicates and loops just retry
        need = count - len(pairs)
        u = rng.integers(0, n, size=max(64, 2 * need))
        v = rng.integers(0, n, size=max(64, 2 * need))
        for a, b in zip(u.tolist(), v.tolist()):
            if a == b:
                continue
            pair = (a, b) if a < b else (b, a)
            pairs.add(pair)
            if len(pairs) == count:
                break
    return pairs
