"""Naive reference implementations used only to check the real ones.

Everything here favors obviousness over speed: repeated-scan peeling,
Floyd-Warshall distances, pair-by-pair path counting, dense eigensolvers.
None of it shares code with the package under test.
"""

import numpy as np


def adjacency_sets(g):
    return [set(g.neighbors(i).tolist()) for i in range(g.node_count)]


def union_find_components(g):
    """Disjoint-set connected components; returns list of frozensets."""
    parent = list(range(g.node_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in g.edge_array():
        ri, rj = find(int(i)), find(int(j))
        if ri != rj:
            parent[ri] = rj
    groups = {}
    for v in range(g.node_count):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in groups.values()]


def peel_k_shell(g):
    """Shell indices by literal staged peeling with full rescans."""
    adj = adjacency_sets(g)
    alive = set(range(g.node_count))
    shell = [0] * g.node_count
    k = 0
    while alive:
        peeled_any = True
        while peeled_any:
            peeled_any = False
            for v in sorted(alive):
                if len(adj[v] & alive) <= k:
                    shell[v] = k
                    alive.discard(v)
                    peeled_any = True
        k += 1
    return np.array(shell)


def floyd_warshall(g):
    """Dense all-pairs hop distances; unreachable = inf."""
    n = g.node_count
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for i, j in g.edge_array():
        d[i, j] = d[j, i] = 1.0
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def path_count_betweenness(g):
    """Normalized betweenness by explicit pair enumeration.

    sigma[s][t] DP over the distance DAG, then for every pair (s, t) and
    candidate v: if d(s,v) + d(v,t) == d(s,t), v collects
    sigma(s,v) * sigma(v,t) / sigma(s,t).
    """
    n = g.node_count
    d = floyd_warshall(g)
    adj = adjacency_sets(g)

    # sigma[s, t]: number of shortest s-t paths, filled by increasing distance
    sigma = np.zeros((n, n))
    for s in range(n):
        sigma[s, s] = 1.0
        reach = [t for t in range(n) if np.isfinite(d[s, t])]
        for t in sorted(reach, key=lambda t: d[s, t]):
            if t == s:
                continue
            sigma[s, t] = sum(sigma[s, u] for u in adj[t] if d[s, u] == d[s, t] - 1)

    bc = np.zeros(n)
    for s in range(n):
        for t in range(s + 1, n):
            if not np.isfinite(d[s, t]) or sigma[s, t] == 0:
                continue
            for v in range(n):
                if v in (s, t):
                    continue
                if d[s, v] + d[v, t] == d[s, t]:
                    bc[v] += sigma[s, v] * sigma[v, t] / sigma[s, t]
    return bc / ((n - 1) * (n - 2) / 2.0)


def brute_clustering(g):
    """2 * (#adjacent neighbor pairs) / (k (k - 1)) per node."""
    adj = adjacency_sets(g)
    out = np.zeros(g.node_count)
    for v in range(g.node_count):
        nb = sorted(adj[v])
        k = len(nb)
        if k < 2:
            continue
        links = sum(
            1 for a in range(k) for b in range(a + 1, k) if nb[b] in adj[nb[a]]
        )
        out[v] = 2.0 * links / (k * (k - 1))
    return out


def principal_eigenvector(g):
    """Dense symmetric eigensolver; returns the top eigenvector, max entry 1."""
    n = g.node_count
    a = np.zeros((n, n))
    for i, j in g.edge_array():
        a[i, j] = a[j, i] = 1.0
    vals, vecs = np.linalg.eigh(a)
    v = vecs[:, -1]
    if v.sum() < 0:
        v = -v
    return v / np.abs(v).max()


def neumann_total_relation(x, terms=200):
    """sum_{k=1..terms} X^k."""
    acc = np.zeros_like(x)
    power = np.eye(x.shape[0])
    for _ in range(terms):
        power = power @ x
        acc += power
    return acc


def brute_gsm(g, shells):
    """GSM from first principles: BFS-by-hand distances, direct sums."""
    n = g.node_count
    d = floyd_warshall(g)
    si = np.array([np.exp(shells[i] / n) for i in range(n)])
    gi = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if j != i and np.isfinite(d[i, j]):
                gi[i] += shells[j] / d[i, j]
    return si, gi, si * gi


def random_graph_edges(n, p, rng):
    """Bernoulli(p) edge list over all pairs."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j))
    return edges
