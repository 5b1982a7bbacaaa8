#!/usr/bin/env python3
"""Two synthetic network profiles and their structural fingerprints.

A social-media-like graph (preferential attachment, 10000 nodes / 25000
edges) next to a transportation-like graph (uniform random, 1000 nodes /
3000 edges).  The first is dominated by hubs; the second is nearly
homogeneous.  Everything printed here comes out of `summarize` and
`degree_histogram`.
"""

import numpy as np

from noderank import GeneratorSpec, degree_histogram, generate, summarize

profiles = {
    "A (social media, scale-free)": GeneratorSpec("scale_free", 10_000, 25_000, seed=42),
    "B (transportation, uniform)": GeneratorSpec("uniform_random", 1_000, 3_000, seed=7),
}

for name, spec in profiles.items():
    g = generate(spec)
    s = summarize(g)
    hist = degree_histogram(g)
    degs = np.sort(g.degrees)[::-1]
    top5_share = degs[: len(degs) // 20].sum() / degs.sum()

    print(f"=== Network {name} ===")
    print(f"  nodes={s.nodes}  edges={s.edges}")
    print(f"  density          {s.density:.6f}   (E / N(N-1) convention)")
    print(f"  mean degree      {s.average_degree:.2f}")
    print(f"  max degree       {degs[0]}  ({degs[0] / s.average_degree:.0f}x the mean)")
    print(f"  top-5% endpoint share   {top5_share:.1%}")
    print(f"  avg path length  {s.average_path_length:.2f}   diameter {s.diameter}")
    print(f"  avg clustering   {s.average_clustering:.4f}")
    print(f"  deepest k-shell  {s.max_k_shell}")
    if hist.exponent is not None:
        print(f"  power-law exponent estimate  {hist.exponent:.2f}  (advisory)")
    print()

print("The scale-free profile concentrates half its endpoints on a few")
print("percent of nodes; the uniform profile spreads connectivity evenly.")
