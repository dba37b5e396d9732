"""Multilevel (Louvain-style) modularity optimisation with an ordered first level."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._accel import njit
from .errors import InvalidInput, InvalidPartition, UnknownCommunity
from .graph import Graph, _from_arrays
from .ordering import NodeOrder, as_rng, natural_order
from .partition import Partition
from .quality import modularity

# A move must raise modularity by more than this; equally good targets
# (within the same slack) are tied.
MOVE_TOL = 1e-13

_CONVERGED, _OUT_OF_DRAWS = 0, 2


class CommunityState:
    """Working state of the local-moving phase.

    ``internal[c]`` is the edge weight inside community ``c`` (each edge and
    self-loop once) and ``total[c]`` the summed strength of its members.
    Community ids live in ``0..n-1``; unused ids have zero totals.
    """

    def __init__(self, g: Graph, labels=None):
        self.graph = g
        n = g.node_count
        self.labels = np.arange(n, dtype=np.int64) if labels is None else np.array(labels, dtype=np.int64)
        if self.labels.shape != (n,) or (n and (self.labels.min() < 0 or self.labels.max() >= n)):
            raise InvalidPartition("labels must be community ids in 0..n-1")
        self.node_strengths = g.strengths()
        self.m = g.total_weight
        self.total = np.bincount(self.labels, weights=self.node_strengths, minlength=n).astype(np.float64)
        internal = self.labels[g.src] == self.labels[g.dst]
        self.internal = np.bincount(
            self.labels[g.src[internal]], weights=g.weight[internal], minlength=n
        ).astype(np.float64)

    @property
    def partition(self) -> Partition:
        return Partition(self.labels)

    def weight_to(self, v: int) -> dict[int, float]:
        """Edge weight from ``v`` to each neighbouring community (self-loop excluded)."""
        g = self.graph
        out: dict[int, float] = {}
        for u, w in g.neighbors(v):
            if u != v:
                c = int(self.labels[u])
                out[c] = out.get(c, 0.0) + w
        return out

    def _loop(self, v):
        return sum(w for u, w in self.graph.neighbors(v) if u == v)

    def modularity_gain(self, v: int, target: int) -> float:
        """Change in Q from inserting ``v`` into ``target`` once ``v`` stands alone.

        For ``v``'s own community the gain is measured against the community
        with ``v`` already taken out.
        """
        if not 0 <= target < self.graph.node_count:
            raise UnknownCommunity(target)
        k_in = self.weight_to(v).get(target, 0.0)
        k_v = self.node_strengths[v]
        tot = self.total[target]
        if self.labels[v] == target:
            tot -= k_v
        return k_in / self.m - tot * k_v / (2.0 * self.m**2)

    def move(self, v: int, target: int) -> None:
        if not 0 <= target < self.graph.node_count:
            raise UnknownCommunity(target)
        links = self.weight_to(v)
        loop = self._loop(v)
        old = int(self.labels[v])
        self.total[old] -= self.node_strengths[v]
        self.internal[old] -= links.get(old, 0.0) + loop
        self.labels[v] = target
        self.total[target] += self.node_strengths[v]
        self.internal[target] += links.get(target, 0.0) + loop

    def modularity(self) -> float:
        m = self.m
        return float(np.sum(self.internal / m - (self.total / (2.0 * m)) ** 2))


def modularity_gain(state: CommunityState, v: int, target: int) -> float:
    return state.modularity_gain(v, target)


@njit
def _local_moving(indptr, indices, data, order, comm, strength, total, m, draws, tol):
    n = len(comm)
    acc = np.zeros(n)
    seen = np.zeros(n, dtype=np.bool_)
    touched = np.empty(n, dtype=np.int64)
    cand = np.empty(n, dtype=np.int64)
    used = 0
    moves = 0
    min_gain = np.inf
    two_m = 2.0 * m
    while True:
        moved = False
        for v in order:
            k_v = strength[v]
            old = comm[v]
            nt = 0
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if u == v:
                    continue
                c = comm[u]
                if not seen[c]:
                    seen[c] = True
                    touched[nt] = c
                    nt += 1
                acc[c] += data[k]
            total[old] -= k_v
            # gains scaled by m: k_in - total * k_v / 2m
            stay = acc[old] - total[old] * k_v / two_m
            best = stay
            for i in range(nt):
                c = touched[i]
                gain = acc[c] - total[c] * k_v / two_m
                if gain > best:
                    best = gain
            target = old
            if best - stay > tol * m:
                nc = 0
                for i in range(nt):
                    c = touched[i]
                    if acc[c] - total[c] * k_v / two_m >= best - tol * m:
                        cand[nc] = c
                        nc += 1
                if nc == 1:
                    target = cand[0]
                else:
                    if used == len(draws):
                        return _OUT_OF_DRAWS, moves, used, min_gain
                    target = cand[min(int(draws[used] * nc), nc - 1)]
                    used += 1
                min_gain = min(min_gain, (acc[target] - total[target] * k_v / two_m - stay) / m)
                moved = True
                moves += 1
            comm[v] = target
            total[target] += k_v
            for i in range(nt):
                acc[touched[i]] = 0.0
                seen[touched[i]] = False
        if not moved:
            return _CONVERGED, moves, used, min_gain


@dataclass
class LevelInfo:
    moves: int
    min_move_gain: float
    modularity: float
    node_count: int


@dataclass
class MultilevelResult:
    partition: Partition
    levels: list = field(default_factory=list)

    @property
    def modularity_trace(self) -> list[float]:
        return [lvl.modularity for lvl in self.levels]


def _check_order(g, order):
    seq = order.sequence if isinstance(order, NodeOrder) else np.asarray(order, dtype=np.int64)
    if len(seq) != g.node_count or not np.array_equal(np.sort(seq), np.arange(g.node_count)):
        raise InvalidInput("order must be a permutation of the graph's nodes")
    return seq


def _run_local_moving(g: Graph, seq, rng):
    n = g.node_count
    strength = g.strengths()
    size = n + 16
    while True:
        state = rng.bit_generator.state
        draws = rng.random(size)
        comm = np.arange(n, dtype=np.int64)
        total = strength.copy()
        status, moves, _, min_gain = _local_moving(
            g.indptr, g.indices, g.data, seq, comm, strength, total, g.total_weight, draws, MOVE_TOL
        )
        if status != _OUT_OF_DRAWS:
            return comm, moves, min_gain
        rng.bit_generator.state = state
        size *= 4


def local_moving(g: Graph, order, rng=None) -> tuple[Partition, bool]:
    """Greedy single-node moves from singletons until no move improves Q.

    Each node is taken out of its community and put where modularity gain is
    largest, staying put on a tie with its old community and choosing
    uniformly among equally good new ones.
    """
    seq = _check_order(g, order)
    if g.total_weight <= 0:
        return Partition.singletons(g.node_count), False
    comm, moves, _ = _run_local_moving(g, seq, as_rng(rng))
    return Partition(comm), moves > 0


def aggregate(g: Graph, partition) -> tuple[Graph, np.ndarray]:
    """Collapse each community into one node.

    Returns the aggregated graph and the map from original node to
    super-node (super-nodes numbered by first appearance). Crossing weights
    are summed; internal weight becomes a self-loop.
    """
    labels = partition.labels if isinstance(partition, Partition) else np.asarray(partition)
    if labels.shape != (g.node_count,):
        raise InvalidPartition("partition does not match the graph")
    index = Partition(labels).canonical().labels
    k = int(index.max()) + 1 if len(index) else 0
    a, b = index[g.src], index[g.dst]
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    keys, inverse = np.unique(lo * k + hi, return_inverse=True)
    weight = np.bincount(inverse, weights=g.weight, minlength=len(keys)).astype(np.float64)
    return _from_arrays(k, keys // k, keys % k, weight), index


def multilevel(g: Graph, order, rng=None, *, return_levels: bool = False):
    """Alternate local moving and aggregation until a level makes no move.

    ``order`` drives the finest level only; coarser levels visit super-nodes
    in natural order.
    """
    seq = _check_order(g, order)
    rng = as_rng(rng)
    n = g.node_count
    membership = np.arange(n, dtype=np.int64)
    result = MultilevelResult(Partition(membership))
    if g.total_weight <= 0:
        return result if return_levels else result.partition
    level = g
    while True:
        comm, moves, min_gain = _run_local_moving(level, seq, rng)
        if moves == 0:
            break
        level, index = aggregate(level, comm)
        membership = index[membership]
        result.levels.append(
            LevelInfo(moves, float(min_gain), modularity(g, membership), level.node_count)
        )
        seq = natural_order(level.node_count).sequence
    result.partition = Partition(membership)
    return result if return_levels else result.partition
