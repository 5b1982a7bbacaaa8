"""Compiled inner loops (numba) over CSR adjacency arrays.

Every kernel takes the graph as (indptr, indices) int64 arrays and is
deterministic: parallel sections only ever write per-source or per-trial
slots, and all floating-point reductions happen afterwards in fixed index
order, so results are bit-identical for any thread count.
"""

import numpy as np
from numba import njit, prange

U64 = np.uint64
_SM_A = U64(0xBF58476D1CE4E5B9)
_SM_B = U64(0x94D049BB133111EB)
_GOLDEN = U64(0x9E3779B97F4A7C15)
_TAG_INFECT = U64(0xA5A5A5A5A5A5A5A5)
_TAG_RECOVER = U64(0xC3C3C3C3C3C3C3C3)
_INV53 = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> U64(30))) * _SM_A
    z = (z ^ (z >> U64(27))) * _SM_B
    return z ^ (z >> U64(31))


@njit(cache=True, inline="always")
def _u01(key, a, b, c):
    # counter-based uniform in [0, 1); draws are a pure function of
    # (key, a, b, c), independent of consumption order
    h = _mix64(key ^ (U64(a) * _GOLDEN + U64(1)))
    h = _mix64(h ^ (U64(b) * _SM_A + U64(2)))
    h = _mix64(h ^ (U64(c) * _SM_B + U64(3)))
    return (h >> U64(11)) * _INV53


@njit(cache=True)
def trial_key(seed, trial, tag):
    return _mix64(_mix64(U64(seed) ^ _GOLDEN) ^ (U64(trial) * _SM_A) ^ U64(tag))


@njit(cache=True)
def bfs_distances(indptr, indices, source):
    """Unweighted single-source distances; unreachable nodes get -1."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    dist[source] = 0
    order[0] = source
    head, tail = 0, 1
    while head < tail:
        v = order[head]
        head += 1
        dv = dist[v]
        for t in range(indptr[v], indptr[v + 1]):
            w = indices[t]
            if dist[w] < 0:
                dist[w] = dv + 1
                order[tail] = w
                tail += 1
    return dist


@njit(cache=True, parallel=True)
def distance_sweep(indptr, indices, weights, sources):
    """One BFS per listed source, reduced on the fly.

    Returns arrays aligned with ``sources``:
      sum_d   - sum of finite distances to all other nodes
      reach   - number of reachable nodes (source excluded)
      ecc     - eccentricity within the source's component
      wsum    - sum over reachable j of weights[j] / d(s, j)
    """
    n = indptr.shape[0] - 1
    m = sources.shape[0]
    sum_d = np.zeros(m, dtype=np.float64)
    reach = np.zeros(m, dtype=np.int64)
    ecc = np.zeros(m, dtype=np.int64)
    wsum = np.zeros(m, dtype=np.float64)
    for si in prange(m):
        s = sources[si]
        dist = np.full(n, -1, dtype=np.int64)
        order = np.empty(n, dtype=np.int64)
        dist[s] = 0
        order[0] = s
        head, tail = 0, 1
        sd = 0.0
        ws = 0.0
        mx = 0
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if dist[w] < 0:
                    d = dv + 1
                    dist[w] = d
                    order[tail] = w
                    tail += 1
                    sd += d
                    ws += weights[w] / d
                    if d > mx:
                        mx = d
        sum_d[si] = sd
        reach[si] = tail - 1
        ecc[si] = mx
        wsum[si] = ws
    return sum_d, reach, ecc, wsum


@njit(cache=True)
def brandes_betweenness(indptr, indices):
    """Raw (unnormalized, endpoint-free) shortest-path betweenness.

    Single-source dependency accumulation; predecessors are recovered by
    scanning neighbors one BFS level up instead of storing lists.
    """
    n = indptr.shape[0] - 1
    bc = np.zeros(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist[:] = -1
        sigma[:] = 0.0
        delta[:] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        for k in range(tail - 1, 0, -1):
            w = order[k]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for t in range(indptr[w], indptr[w + 1]):
                v = indices[t]
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
        for v in range(n):
            if v != s:
                bc[v] += delta[v]
    # each undirected pair was counted from both endpoints
    return bc * 0.5


@njit(cache=True)
def component_labels(indptr, indices, alive):
    """Label connected components among alive nodes; dead nodes get -1.

    Returns (labels, sizes) where sizes[c] is the node count of component c
    and components are numbered in order of their smallest member.
    """
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, dtype=np.int64)
    sizes = np.zeros(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    comp = 0
    for s in range(n):
        if not alive[s] or labels[s] >= 0:
            continue
        labels[s] = comp
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if alive[w] and labels[w] < 0:
                    labels[w] = comp
                    order[tail] = w
                    tail += 1
        sizes[comp] = tail
        comp += 1
    return labels, sizes[:comp]


@njit(cache=True)
def largest_component_size(indptr, indices, alive):
    n = indptr.shape[0] - 1
    seen = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    best = 0
    for s in range(n):
        if not alive[s] or seen[s]:
            continue
        seen[s] = True
        order[0] = s
        head, tail = 0, 1
        while head < tail:
            v = order[head]
            head += 1
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if alive[w] and not seen[w]:
                    seen[w] = True
                    order[tail] = w
                    tail += 1
        if tail > best:
            best = tail
    return best


@njit(cache=True)
def triangle_counts(indptr, indices):
    """Triangles through each node; neighbor lists must be sorted."""
    n = indptr.shape[0] - 1
    tri = np.zeros(n, dtype=np.int64)
    for v in range(n):
        lo, hi = indptr[v], indptr[v + 1]
        for t in range(lo, hi):
            u = indices[t]
            if u <= v:
                continue
            # sorted-merge intersection of adj(v) and adj(u)
            a, b = lo, indptr[u]
            a_end, b_end = hi, indptr[u + 1]
            while a < a_end and b < b_end:
                x = indices[a]
                y = indices[b]
                if x == y:
                    if x > u:  # count each triangle once at its smallest vertex
                        tri[v] += 1
                        tri[u] += 1
                        tri[x] += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
    return tri


@njit(cache=True)
def csr_matvec(indptr, indices, x, out):
    n = indptr.shape[0] - 1
    for i in range(n):
        acc = 0.0
        for t in range(indptr[i], indptr[i + 1]):
            acc += x[indices[t]]
        out[i] = acc


@njit(cache=True)
def _sir_single(indptr, indices, seeds, beta, mu, max_steps, key, counts, record):
    """One synchronous SIR trial driven by counter-based uniforms.

    Infection attempts are keyed by (infector, target, infection age), so a
    node's attempt sequence does not depend on when it was infected.  With
    shared keys this yields the percolation coupling: outbreaks are pathwise
    non-decreasing in beta and comparable across different seed sets.

    Returns (recovered_count, steps_run); `counts` receives per-step
    (S, I, R) rows when record is True.
    """
    n = indptr.shape[0] - 1
    state = np.zeros(n, dtype=np.int8)  # 0 S, 1 I, 2 R
    age = np.zeros(n, dtype=np.int64)
    infected = np.empty(n, dtype=np.int64)
    fresh = np.empty(n, dtype=np.int64)
    n_inf = 0
    for k in range(seeds.shape[0]):
        s = seeds[k]
        if state[s] == 0:
            state[s] = 1
            age[s] = 1
            infected[n_inf] = s
            n_inf += 1
    n_rec = 0
    step = 0
    while n_inf > 0 and step < max_steps:
        n_fresh = 0
        for k in range(n_inf):
            i = infected[k]
            a = age[i]
            for t in range(indptr[i], indptr[i + 1]):
                j = indices[t]
                if state[j] == 0 and _u01(key ^ _TAG_INFECT, i, j, a) < beta:
                    state[j] = 3  # infected this step; infectious next step
                    fresh[n_fresh] = j
                    n_fresh += 1
        keep = 0
        for k in range(n_inf):
            i = infected[k]
            if _u01(key ^ _TAG_RECOVER, i, age[i], 0) < mu:
                state[i] = 2
                n_rec += 1
            else:
                age[i] += 1
                infected[keep] = i
                keep += 1
        n_inf = keep
        for k in range(n_fresh):
            j = fresh[k]
            state[j] = 1
            age[j] = 1
            infected[n_inf] = j
            n_inf += 1
        step += 1
        if record:
            counts[step - 1, 0] = n - n_inf - n_rec
            counts[step - 1, 1] = n_inf
            counts[step - 1, 2] = n_rec
    return n_rec, step


@njit(cache=True, parallel=True)
def sir_outbreaks(indptr, indices, seeds, beta, mu, max_steps, keys):
    """Final recovered counts for a batch of trials (one key per trial)."""
    trials = keys.shape[0]
    out = np.zeros(trials, dtype=np.int64)
    dummy = np.zeros((1, 3), dtype=np.int64)
    for t in prange(trials):
        rec, _ = _sir_single(indptr, indices, seeds, beta, mu, max_steps, keys[t], dummy, False)
        out[t] = rec
    return out


@njit(cache=True, parallel=True)
def sir_outbreaks_per_seed(indptr, indices, seed_nodes, beta, mu, max_steps, keys):
    """Single-seed outbreaks: trial t of seed slot i uses keys[i, t].

    Sharing the same `keys` row structure between two seed lists pairs the
    trials (common random numbers).
    """
    k = seed_nodes.shape[0]
    trials = keys.shape[1]
    out = np.zeros((k, trials), dtype=np.int64)
    dummy = np.zeros((1, 3), dtype=np.int64)
    one = np.empty(1, dtype=np.int64)
    for i in range(k):
        one[0] = seed_nodes[i]
        seed_arr = one.copy()
        for t in prange(trials):
            rec, _ = _sir_single(
                indptr, indices, seed_arr, beta, mu, max_steps, keys[i, t], dummy, False
            )
            out[i, t] = rec
    return out
