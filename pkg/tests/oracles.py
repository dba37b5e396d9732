"""Independent brute-force references used by the tests.

Nothing here calls into the package's algorithms; graphs are passed as
plain ``(n, [(u, v, w), ...])`` data.
"""
import itertools
import math

import numpy as np

TOL = 1e-12


def adjacency(n, edges):
    adj = [dict() for _ in range(n)]
    for u, v, w in edges:
        adj[u][v] = w
        adj[v][u] = w
    return adj


def floyd_warshall(n, edges):
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, w in edges:
        if u != v:
            d[u, v] = d[v, u] = min(d[u, v], 1.0 / w)
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def shortest_paths(n, edges, s, t):
    """All shortest simple s-t paths, by exhaustive DFS pruned at the optimum."""
    adj = adjacency(n, edges)
    best = floyd_warshall(n, edges)[s, t]
    if not np.isfinite(best):
        return []
    found = []

    def dfs(v, length, path):
        if length > best + TOL * max(1.0, best):
            return
        if v == t:
            found.append(list(path))
            return
        for u, w in adj[v].items():
            if u not in path:
                path.append(u)
                dfs(u, length + 1.0 / w, path)
                path.pop()

    dfs(s, 0.0, [s])
    return found


def betweenness(n, edges):
    bet = [0.0] * n
    for s, t in itertools.combinations(range(n), 2):
        paths = shortest_paths(n, edges, s, t)
        if not paths:
            continue
        for v in range(n):
            if v in (s, t):
                continue
            bet[v] += sum(v in p for p in paths) / len(paths)
    return np.array(bet)


def closeness(n, edges):
    d = floyd_warshall(n, edges)
    return np.array([1.0 / math.fsum(d[v, i] for i in range(n) if i != v) for v in range(n)])


def degree(n, edges):
    s = [0.0] * n
    for u, v, w in edges:
        s[u] += w
        s[v] += w
    return np.array(s)


def pagerank(n, edges, damping=0.85, iters=5000):
    """Dense transition-matrix power iteration."""
    a = np.zeros((n, n))
    for u, v, w in edges:
        a[u, v] += w
        a[v, u] += w
    out = a.sum(axis=1)
    p = np.zeros((n, n))
    for u in range(n):
        p[u] = a[u] / out[u] if out[u] > 0 else 1.0 / n
    x = np.full(n, 1.0 / n)
    for _ in range(iters):
        nxt = (1 - damping) / n + damping * x @ p
        if np.max(np.abs(nxt - x)) < 1e-15:
            break
        x = nxt
    return nxt


def modularity_double_sum(n, edges, labels):
    """(1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j) with A_ii = 2 * loop."""
    a = np.zeros((n, n))
    for u, v, w in edges:
        if u == v:
            a[u, u] += 2 * w
        else:
            a[u, v] += w
            a[v, u] += w
    k = a.sum(axis=1)
    two_m = k.sum()
    total = 0.0
    for i in range(n):
        for j in range(n):
            if labels[i] == labels[j]:
                total += a[i, j] - k[i] * k[j] / two_m
    return total / two_m


def random_graph(rng, n_min=2, n_max=8, p=0.45, connected=True, dyadic=None):
    """Random simple weighted graph; dyadic weights make path-length ties exact."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        dy = bool(rng.integers(2)) if dyadic is None else dyadic
        edges = []
        for u, v in itertools.combinations(range(n), 2):
            if rng.random() < p:
                w = float(rng.choice([1.0, 2.0, 4.0])) if dy else float(rng.uniform(0.5, 3.0))
                edges.append((u, v, w))
        if not connected or is_connected(n, edges):
            return n, edges


def is_connected(n, edges):
    adj = adjacency(n, edges)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def best_single_move_gain(n, edges, labels):
    """Largest modularity gain of any one node relocation (double-sum recomputation)."""
    base = modularity_double_sum(n, edges, labels)
    best = -np.inf
    comms = set(labels)
    for v in range(n):
        for c in comms | {max(comms) + 1}:
            if c == labels[v]:
                continue
            trial = list(labels)
            trial[v] = c
            best = max(best, modularity_double_sum(n, edges, trial) - base)
    return best
