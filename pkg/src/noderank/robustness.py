"""Node-removal experiments: how fast does the largest component shrink?

Victims are chosen either uniformly at random (per-trial streams derived
from (seed, trial) so adding trials never reshuffles earlier ones) or by
descending STATIC score: the target list is fixed from the intact graph
rather than recomputed after each step, which is both the cheaper and the
reproducible reading of a high-degree attack.  An adaptive variant that
re-sorts by residual degree after every step is available behind a flag
for comparison.

Curves report the surviving largest-component size as a fraction of the
ORIGINAL largest component, so disconnected inputs behave sensibly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .centrality import rank_order
from .errors import PlanInfeasibleError
from .graph import Graph

__all__ = ["RemovalPlan", "RobustnessCurve", "StrategyComparison", "run_removal", "compare_strategies"]

STRATEGIES = ("random", "targeted_degree", "targeted_measure")


@dataclass(frozen=True)
class RemovalPlan:
    strategy: str
    step_fraction: float = 0.01
    max_fraction: float = 0.30
    trials: int = 10
    seed: int = 0
    measure: np.ndarray | None = None  # static per-node scores for targeted_measure
    adaptive: bool = False             # re-rank by residual degree after each step

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise PlanInfeasibleError(f"unknown strategy {self.strategy!r}")
        if not 0.0 < self.step_fraction <= self.max_fraction <= 1.0:
            raise PlanInfeasibleError(
                f"need 0 < step <= max <= 1, got step={self.step_fraction}, max={self.max_fraction}"
            )
        if self.trials < 1:
            raise PlanInfeasibleError(f"trials must be >= 1, got {self.trials}")
        if self.strategy == "targeted_measure" and self.measure is None:
            raise PlanInfeasibleError("targeted_measure needs a measure vector")

    @property
    def deterministic(self) -> bool:
        return self.strategy != "random"


@dataclass(frozen=True)
class RobustnessCurve:
    strategy: str
    fractions: np.ndarray      # includes the 0.0 starting point
    mean_lcc: np.ndarray       # LCC fraction of the original LCC
    stddev: np.ndarray
    baseline_lcc: int
    trials: int
    per_trial: np.ndarray | None = None  # (trials, points) raw trajectories

    @property
    def auc(self) -> float:
        """Mean LCC fraction over the removal steps (the 0% point excluded)."""
        return float(self.mean_lcc[1:].mean())


@dataclass(frozen=True)
class StrategyComparison:
    curves: dict[str, RobustnessCurve]

    @property
    def auc(self) -> dict[str, float]:
        return {name: curve.auc for name, curve in self.curves.items()}


def _victim_order(g: Graph, plan: RemovalPlan, trial: int) -> np.ndarray:
    if plan.strategy == "random":
        rng = np.random.default_rng([plan.seed, trial])
        return rng.permutation(g.node_count)
    if plan.strategy == "targeted_degree":
        return rank_order(g.degrees.astype(np.float64))
    return rank_order(np.asarray(plan.measure, dtype=np.float64))


def _removal_counts(n: int, plan: RemovalPlan) -> tuple[np.ndarray, np.ndarray]:
    steps = int(plan.max_fraction / plan.step_fraction + 1e-9)  # floor, never past max
    fractions = plan.step_fraction * np.arange(0, steps + 1)
    counts = (fractions * n + 0.5).astype(np.int64)  # round half up
    counts = np.minimum(counts, n)
    return fractions, counts


def _trial_curve(g: Graph, order: np.ndarray, counts: np.ndarray, baseline: int,
                 adaptive: bool) -> np.ndarray:
    alive = np.ones(g.node_count, dtype=np.bool_)
    lcc = np.empty(counts.shape[0], dtype=np.float64)
    removed = 0
    deg = g.degrees.astype(np.int64).copy() if adaptive else None
    pos = 0
    for k, target in enumerate(counts):
        while removed < target:
            if adaptive:
                cand = np.flatnonzero(alive)
                v = cand[np.argmax(deg[cand])]  # argmax keeps ascending-index ties
            else:
                while not alive[order[pos]]:
                    pos += 1
                v = order[pos]
                pos += 1
            alive[v] = False
            if adaptive:
                for w in g.indices[g.indptr[v]:g.indptr[v + 1]]:
                    deg[w] -= 1
            removed += 1
        size = _kernels.largest_component_size(g.indptr, g.indices, alive)
        lcc[k] = size / baseline
    return lcc


def run_removal(g: Graph, plan: RemovalPlan) -> RobustnessCurve:
    """Execute one removal plan and return its degradation curve."""
    n = g.node_count
    if n < 10:
        raise PlanInfeasibleError(f"need at least 10 nodes, got {n}")
    if plan.deterministic and plan.trials != 1:
        plan = replace(plan, trials=1)
    baseline = _kernels.largest_component_size(g.indptr, g.indices, np.ones(n, dtype=np.bool_))
    fractions, counts = _removal_counts(n, plan)

    per_trial = np.empty((plan.trials, counts.shape[0]), dtype=np.float64)
    for trial in range(plan.trials):
        order = _victim_order(g, plan, trial)
        per_trial[trial] = _trial_curve(g, order, counts, baseline, plan.adaptive)

    mean = per_trial.mean(axis=0)
    std = per_trial.std(axis=0, ddof=1) if plan.trials > 1 else np.zeros_like(mean)
    return RobustnessCurve(
        strategy=plan.strategy,
        fractions=fractions,
        mean_lcc=mean,
        stddev=std,
        baseline_lcc=int(baseline),
        trials=plan.trials,
        per_trial=per_trial,
    )


def compare_strategies(g: Graph, plans: list[RemovalPlan]) -> StrategyComparison:
    """Run several plans on the same graph; curves share the step grid."""
    if len(plans) < 2:
        raise PlanInfeasibleError("need at least two plans to compare")
    grids = {(p.step_fraction, p.max_fraction) for p in plans}
    if len(grids) != 1:
        raise PlanInfeasibleError("plans must share step and max fractions")
    curves: dict[str, RobustnessCurve] = {}
    for plan in plans:
        name = plan.strategy
        if name in curves:
            name = f"{name}_{sum(k.startswith(plan.strategy) for k in curves)}"
        curves[name] = run_removal(g, plan)
    return StrategyComparison(curves=curves)
