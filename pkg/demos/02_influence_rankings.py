#!/usr/bin/env python3
"""How the fused influence ranking is put together, step by step.

On a small scale-free graph: k-shell decomposition feeds the GSM scores
(self-influence from own coreness, global influence from everyone else's
coreness discounted by distance), DEMATEL turns the adjacency matrix into
total direct+indirect relation flows, and the fused score is a convex
blend of the two.  The classical baselines are printed alongside.
"""

import numpy as np

from noderank import (
    GeneratorSpec,
    dematel_direct,
    dematel_total,
    fused_ranking,
    generate,
    gsm_scores,
    k_shell,
    rank_by,
)

g = generate(GeneratorSpec("scale_free", 300, 750, seed=11))
print(f"graph: {g.node_count} nodes, {g.edge_count} edges\n")

shells = k_shell(g)
gsm = gsm_scores(g, shells)
dem = dematel_total(dematel_direct(g))
fused = fused_ranking(gsm, dem, alpha=0.5)

print("ten highest fused scores (alpha = 0.5):")
print(f"{'node':>5} {'deg':>4} {'ks':>3} {'SI':>7} {'GI':>9} {'GSM':>9} "
      f"{'promin.':>8} {'fused':>7}")
for i in fused.order[:10]:
    print(f"{i:>5} {g.degrees[i]:>4} {shells[i]:>3} {gsm.self_influence[i]:>7.4f} "
          f"{gsm.global_influence[i]:>9.2f} {gsm.gsm[i]:>9.2f} "
          f"{dem.prominence[i]:>8.3f} {fused.fused[i]:>7.4f}")

print("\nhow much do the rankings agree?  top-10 under each measure:")
for measure in ("dc", "bc", "cc", "ec", "kshell", "gsm", "dematel", "fused"):
    top = rank_by(measure, g)[:10]
    print(f"  {measure:>8}: {top.tolist()}")

overlap = len(set(rank_by("dc", g)[:10]) & set(fused.order[:10].tolist()))
print(f"\ndegree vs fused top-10 overlap: {overlap}/10.")
print("The blend keeps the obvious hubs but re-orders nodes whose reach")
print("exceeds their raw degree (deep-core placement, short distances).")
