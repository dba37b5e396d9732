"""Ordered, asynchronous, weighted label propagation."""
from __future__ import annotations

import numpy as np

from ._accel import njit
from .errors import InvalidInput, NoConvergence
from .graph import Graph, _check_node
from .ordering import NodeOrder, as_rng
from .partition import Partition

CONVERGED, SWEEP_LIMIT, OUT_OF_DRAWS = 0, 1, 2

# relative slack when comparing accumulated label weights
WEIGHT_TIE_RTOL = 1e-12


def neighbor_label_weights(g: Graph, v: int, labels) -> dict[int, float]:
    _check_node(g, v)
    labels = labels.labels if isinstance(labels, Partition) else np.asarray(labels)
    tally: dict[int, float] = {}
    for u, w in g.neighbors(v):
        lab = int(labels[u])
        tally[lab] = tally.get(lab, 0.0) + w
    return tally


@njit
def _propagate(indptr, indices, data, order, labels, draws, max_sweeps, rtol):
    n = len(labels)
    acc = np.zeros(n)
    touched = np.empty(n, dtype=np.int64)
    cand = np.empty(n, dtype=np.int64)
    used = 0
    for sweep in range(1, max_sweeps + 1):
        changed = False
        for v in order:
            lo = indptr[v]
            hi = indptr[v + 1]
            if lo == hi:
                continue
            nt = 0
            best = 0.0
            for k in range(lo, hi):
                lab = labels[indices[k]]
                if acc[lab] == 0.0:
                    touched[nt] = lab
                    nt += 1
                acc[lab] += data[k]
                if acc[lab] > best:
                    best = acc[lab]
            floor = best - rtol * best
            if acc[labels[v]] < floor:
                nc = 0
                for i in range(nt):
                    if acc[touched[i]] >= floor:
                        cand[nc] = touched[i]
                        nc += 1
                if used == len(draws):
                    for i in range(nt):
                        acc[touched[i]] = 0.0
                    return OUT_OF_DRAWS, sweep, used
                pick = int(draws[used] * nc)
                used += 1
                labels[v] = cand[min(pick, nc - 1)]
                changed = True
            for i in range(nt):
                acc[touched[i]] = 0.0
        if not changed:
            return CONVERGED, sweep, used
    return SWEEP_LIMIT, max_sweeps, used


def label_propagation(
    g: Graph, order: NodeOrder, rng=None, max_sweeps: int = 1000, *, return_sweeps: bool = False
):
    """Run label propagation, visiting nodes in ``order`` each sweep.

    Every node starts with its own label. A node keeps its label when that
    label is among the heaviest in its neighbourhood and otherwise takes a
    uniformly random heaviest one. Stops after a sweep with no change.

    Raises
    ------
    NoConvergence
        After ``max_sweeps`` sweeps; ``exc.result`` holds the last partition.
    """
    seq = order.sequence if isinstance(order, NodeOrder) else np.asarray(order, dtype=np.int64)
    if len(seq) != g.node_count or not np.array_equal(np.sort(seq), np.arange(g.node_count)):
        raise InvalidInput("order must be a permutation of the graph's nodes")
    rng = as_rng(rng)
    size = 4 * g.node_count + 16
    while True:
        state = rng.bit_generator.state
        draws = rng.random(size)
        labels = np.arange(g.node_count, dtype=np.int64)
        status, sweeps, _ = _propagate(
            g.indptr, g.indices, g.data, seq, labels, draws, max_sweeps, WEIGHT_TIE_RTOL
        )
        if status != OUT_OF_DRAWS:
            break
        # replay the same stream with a longer buffer
        rng.bit_generator.state = state
        size *= 4
    part = Partition(labels)
    if status == SWEEP_LIMIT:
        raise NoConvergence(f"label propagation not stable after {max_sweeps} sweeps", part, sweeps)
    return (part, sweeps) if return_sweeps else part


def is_stable(g: Graph, partition: Partition) -> bool:
    """True if every node's label is among its heaviest neighbour labels."""
    for v in range(g.node_count):
        tally = neighbor_label_weights(g, v, partition)
        if not tally:
            continue
        best = max(tally.values())
        if tally.get(int(partition.labels[v]), 0.0) < best - WEIGHT_TIE_RTOL * best:
            return False
    return True
