"""Node centrality scores used to build visit orders.

Shortest-path lengths treat each edge as having length ``1 / weight``.
Betweenness is the fractional (Brandes) form over unordered pairs with
endpoints excluded.
"""
from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

import numpy as np

from ._accel import njit
from .errors import DegenerateGraph, DisconnectedGraph, InvalidInput, NoConvergence
from .graph import Graph, _check_node

# Two path lengths closer than this (relative) count as equal when
# counting shortest paths.
PATH_TIE_RTOL = 1e-12


class Measure(str, enum.Enum):
    DEGREE = "degree"
    PAGERANK = "pagerank"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    COMBINED = "combined"


@dataclass(frozen=True)
class CentralityScores:
    measure: Measure
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "measure", Measure(self.measure))
        values = np.asarray(self.values, dtype=np.float64)
        if not np.all(np.isfinite(values)):
            raise InvalidInput(f"{self.measure.value} scores must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def degree_scores(g: Graph) -> CentralityScores:
    return CentralityScores(Measure.DEGREE, g.strengths())


def pagerank_scores(
    g: Graph, damping: float = 0.85, tol: float = 1e-10, max_iter: int = 1000
) -> CentralityScores:
    """Weighted PageRank by power iteration.

    Each node spreads its score to neighbours in proportion to edge weight;
    isolated nodes spread theirs uniformly. Iteration stops once the largest
    per-node change is at most ``tol``.
    """
    n = g.node_count
    if n == 0:
        return CentralityScores(Measure.PAGERANK, np.zeros(0))
    rows = np.repeat(np.arange(n), np.diff(g.indptr))
    # a self-loop sends 2w back to its own node, matching the strength convention
    w = np.where(rows == g.indices, 2.0 * g.data, g.data)
    s = g.strengths()
    dangling = s == 0
    inv_s = np.divide(1.0, s, out=np.zeros(n), where=~dangling)
    pr = np.full(n, 1.0 / n)
    for it in range(1, max_iter + 1):
        flow = np.bincount(g.indices, weights=(pr * inv_s)[rows] * w, minlength=n)
        new = (1.0 - damping) / n + damping * (flow + pr[dangling].sum() / n)
        delta = np.max(np.abs(new - pr))
        pr = new
        if delta <= tol:
            return CentralityScores(Measure.PAGERANK, pr)
    raise NoConvergence(f"PageRank did not converge in {max_iter} iterations", pr, max_iter)


@njit
def _dijkstra(indptr, indices, data, source):
    n = len(indptr) - 1
    dist = np.full(n, np.inf)
    settled = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    count = 0
    dist[source] = 0.0
    heap = [(0.0, source)]
    while len(heap) > 0:
        d, v = heapq.heappop(heap)
        if settled[v]:
            continue
        settled[v] = True
        order[count] = v
        count += 1
        for k in range(indptr[v], indptr[v + 1]):
            u = indices[k]
            if u == v:
                continue
            alt = d + 1.0 / data[k]
            if alt < dist[u]:
                dist[u] = alt
                heapq.heappush(heap, (alt, u))
    return dist, order[:count]


@njit
def _betweenness(indptr, indices, data, rtol):
    n = len(indptr) - 1
    bet = np.zeros(n)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    for s in range(n):
        dist, order = _dijkstra(indptr, indices, data, s)
        sigma[:] = 0.0
        delta[:] = 0.0
        sigma[s] = 1.0
        for i in range(1, len(order)):
            u = order[i]
            tol = rtol * max(1.0, dist[u])
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if v != u and abs(dist[v] + 1.0 / data[k] - dist[u]) <= tol:
                    sigma[u] += sigma[v]
        for i in range(len(order) - 1, 0, -1):
            u = order[i]
            tol = rtol * max(1.0, dist[u])
            coeff = (1.0 + delta[u]) / sigma[u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if v != u and abs(dist[v] + 1.0 / data[k] - dist[u]) <= tol:
                    delta[v] += sigma[v] * coeff
            bet[u] += delta[u]
    # every unordered pair was counted from both ends
    return bet / 2.0


def shortest_distances(g: Graph, src: int) -> np.ndarray:
    """Shortest-path lengths from ``src``; unreachable nodes are ``inf``."""
    _check_node(g, src)
    dist, _ = _dijkstra(g.indptr, g.indices, g.data, np.int64(src))
    return dist


def _require_connected(g: Graph) -> None:
    if g.node_count < 2:
        raise DegenerateGraph("closeness needs at least two nodes")
    if not g.is_connected():
        raise DisconnectedGraph("closeness is undefined on a disconnected graph")


def closeness_scores(g: Graph) -> CentralityScores:
    _require_connected(g)
    values = np.empty(g.node_count)
    for v in range(g.node_count):
        dist, _ = _dijkstra(g.indptr, g.indices, g.data, np.int64(v))
        values[v] = 1.0 / dist.sum()
    return CentralityScores(Measure.CLOSENESS, values)


def betweenness_scores(g: Graph) -> CentralityScores:
    return CentralityScores(
        Measure.BETWEENNESS, _betweenness(g.indptr, g.indices, g.data, PATH_TIE_RTOL)
    )


def relative_closeness(clo: CentralityScores) -> np.ndarray:
    """Rescale closeness into (0, 1/2): ``c / (2 * max(c) + 1)``."""
    if Measure(clo.measure) is not Measure.CLOSENESS:
        raise InvalidInput(f"expected closeness scores, got {clo.measure}")
    c = clo.values
    if len(c) == 0 or np.any(c <= 0):
        raise InvalidInput("closeness values must all be positive")
    return c / (2.0 * c.max() + 1.0)


def combined_scores(g: Graph) -> CentralityScores:
    """Betweenness plus relative closeness."""
    clo = closeness_scores(g)
    bet = betweenness_scores(g)
    return CentralityScores(Measure.COMBINED, bet.values + relative_closeness(clo))


SCORERS = {
    Measure.DEGREE: degree_scores,
    Measure.PAGERANK: pagerank_scores,
    Measure.CLOSENESS: closeness_scores,
    Measure.BETWEENNESS: betweenness_scores,
    Measure.COMBINED: combined_scores,
}


def compute(g: Graph, measure) -> CentralityScores:
    return SCORERS[Measure(measure)](g)
