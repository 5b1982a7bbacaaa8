#!/usr/bin/env python3
"""Largest-component decay under random failure vs targeted attack.

The scale-free profile survives random removals well but collapses when
its hubs are deleted first; the uniform profile barely distinguishes the
two.  The AUC index (mean LCC fraction across removal steps) condenses
each curve into one number.
"""

from noderank import GeneratorSpec, RemovalPlan, compare_strategies, generate

GRIDS = dict(step_fraction=0.05, max_fraction=0.30)

for name, spec in {
    "scale-free (2000 nodes)": GeneratorSpec("scale_free", 2_000, 5_000, seed=42),
    "uniform (1000 nodes)": GeneratorSpec("uniform_random", 1_000, 3_000, seed=7),
}.items():
    g = generate(spec)
    cmp = compare_strategies(g, [
        RemovalPlan(strategy="targeted_degree", **GRIDS),
        RemovalPlan(strategy="random", trials=10, seed=1, **GRIDS),
    ])
    targeted = cmp.curves["targeted_degree"]
    random_ = cmp.curves["random"]

    print(f"=== {name} ===")
    print(f"{'removed':>8} {'targeted LCC':>13} {'random LCC':>11}")
    for f, t, r in zip(targeted.fractions, targeted.mean_lcc, random_.mean_lcc):
        print(f"{f:>8.0%} {t:>13.3f} {r:>11.3f}")
    print(f"  AUC: targeted {targeted.auc:.3f}  vs  random {random_.auc:.3f} "
          f"(gap {random_.auc - targeted.auc:.3f})\n")

print("Reading the gaps: hub-targeted deletion tears the scale-free core")
print("apart long before random failure does, while the uniform network")
print("degrades at nearly the same gentle rate either way.")
