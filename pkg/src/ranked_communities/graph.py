"""Immutable weighted undirected graphs, edge-list I/O and ring lattices."""
from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DuplicateEdge,
    IndexOutOfRange,
    InvalidParams,
    NonPositiveWeight,
    ParseError,
    SelfLoopError,
)

# Watts-Strogatz constants used by the experiments: no rewiring, 1-D lattice.
REWIRING_PROBABILITY = 0.0
LATTICE_DIMENSION = 1


@dataclass(frozen=True)
class Graph:
    """Undirected weighted graph with dense node ids ``0..n-1``.

    Edges are stored once each in ``src``/``dst``/``weight`` (with
    ``src <= dst``) and expanded into a symmetric CSR adjacency
    (``indptr``, ``indices``, ``data``). A self-loop appears once in its
    node's adjacency row.
    """

    node_count: int
    src: np.ndarray
    dst: np.ndarray
    weight: np.ndarray
    indptr: np.ndarray = field(repr=False)
    indices: np.ndarray = field(repr=False)
    data: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.node_count

    @property
    def edge_count(self) -> int:
        return len(self.src)

    @property
    def total_weight(self) -> float:
        """Sum of edge weights, self-loops counted once."""
        return float(self.weight.sum())

    def edges(self) -> list[tuple[int, int, float]]:
        return [(int(u), int(v), float(w)) for u, v, w in zip(self.src, self.dst, self.weight)]

    def neighbors(self, v: int) -> list[tuple[int, float]]:
        _check_node(self, v)
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return [(int(u), float(w)) for u, w in zip(self.indices[lo:hi], self.data[lo:hi])]

    def strengths(self) -> np.ndarray:
        """Weighted degree of every node; a self-loop of weight w adds 2w."""
        s = np.zeros(self.node_count)
        np.add.at(s, self.src, self.weight)
        np.add.at(s, self.dst, self.weight)
        return s

    def has_self_loops(self) -> bool:
        return bool(np.any(self.src == self.dst))

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        seen = np.zeros(self.node_count, dtype=bool)
        stack = [0]
        seen[0] = True
        while stack:
            v = stack.pop()
            for u in self.indices[self.indptr[v]:self.indptr[v + 1]]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(int(u))
        return bool(seen.all())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.node_count == other.node_count and sorted(self.edges()) == sorted(other.edges())

    __hash__ = None


def _check_node(g: Graph, v: int) -> None:
    if not 0 <= v < g.node_count:
        raise IndexOutOfRange(f"node {v} not in 0..{g.node_count - 1}")


def build_graph(
    n: int,
    edge_list: Iterable[Sequence],
    *,
    allow_self_loops: bool = False,
) -> Graph:
    """Validate ``(u, v, w)`` triples and build a :class:`Graph`.

    Raises
    ------
    IndexOutOfRange, NonPositiveWeight, DuplicateEdge, SelfLoopError
    """
    if n < 0:
        raise InvalidParams("node count must be non-negative")
    src, dst, wts = [], [], []
    seen = set()
    for edge in edge_list:
        u, v = int(edge[0]), int(edge[1])
        w = float(edge[2]) if len(edge) > 2 else 1.0
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if not (w > 0.0) or not np.isfinite(w):
            raise NonPositiveWeight(f"edge ({u}, {v}) has weight {w}")
        if u == v and not allow_self_loops:
            raise SelfLoopError(f"self-loop on node {u}")
        key = (u, v) if u <= v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        src.append(key[0])
        dst.append(key[1])
        wts.append(w)
    return _from_arrays(
        n,
        np.asarray(src, dtype=np.int64),
        np.asarray(dst, dtype=np.int64),
        np.asarray(wts, dtype=np.float64),
    )


def _from_arrays(n: int, src: np.ndarray, dst: np.ndarray, weight: np.ndarray) -> Graph:
    # Arrays must already be validated: src <= dst, no duplicates.
    loop = src == dst
    rows = np.concatenate([src, dst[~loop]])
    cols = np.concatenate([dst, src[~loop]])
    vals = np.concatenate([weight, weight[~loop]])
    order = np.lexsort((cols, rows))
    rows, cols, vals = rows[order], cols[order], vals[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, rows + 1, 1)
    np.cumsum(indptr, out=indptr)
    for arr in (src, dst, weight, indptr, cols, vals):
        arr.setflags(write=False)
    return Graph(n, src, dst, weight, indptr, cols.astype(np.int64), vals)


def strength(g: Graph, v: int) -> float:
    _check_node(g, v)
    lo, hi = g.indptr[v], g.indptr[v + 1]
    total = 0.0
    for u, w in zip(g.indices[lo:hi], g.data[lo:hi]):
        total += 2.0 * w if u == v else w
    return float(total)


def parse_edge_list(text) -> Graph:
    """Parse ``u v [w]`` lines; ``#`` starts a comment.

    ``text`` may be a string or a readable text stream. The node count is one
    more than the largest id seen; id gaps become isolated nodes.
    """
    if isinstance(text, str):
        text = io.StringIO(text)
    triples = []
    max_id = -1
    for lineno, raw in enumerate(text, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(lineno, f"expected 'u v [w]', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"node ids must be integers: {raw.strip()!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "node ids must be non-negative")
        try:
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ParseError(lineno, f"bad weight {parts[2]!r}") from None
        triples.append((u, v, w))
        max_id = max(max_id, u, v)
    return build_graph(max_id + 1, triples)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list` (``repr`` keeps weights exact)."""
    lines = [f"{u} {v} {w!r}" for u, v, w in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


@dataclass(frozen=True)
class LatticeParams:
    """Ring lattice size ``n`` and neighbourhood radius ``nei``.

    Rewiring probability is fixed at 0 and the lattice dimension at 1.
    """

    n: int
    nei: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParams(f"n must be >= 3, got {self.n}")
        if self.nei < 1 or 2 * self.nei >= self.n:
            raise InvalidParams(f"need 1 <= nei < n/2, got n={self.n}, nei={self.nei}")


def ring_lattice(params: LatticeParams | tuple[int, int]) -> Graph:
    """Circulant graph: node i is joined to (i + j) mod n for j = 1..nei.

    Unit weights, ``n * nei`` edges, every node of degree ``2 * nei``.
    """
    if not isinstance(params, LatticeParams):
        params = LatticeParams(*params)
    n, nei = params.n, params.nei
    base = np.repeat(np.arange(n, dtype=np.int64), nei)
    other = (base + np.tile(np.arange(1, nei + 1, dtype=np.int64), n)) % n
    src = np.minimum(base, other)
    dst = np.maximum(base, other)
    order = np.lexsort((dst, src))
    return _from_arrays(n, src[order], dst[order], np.ones(n * nei))
