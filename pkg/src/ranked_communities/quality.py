"""Weighted Newman-Girvan modularity."""
from __future__ import annotations

import math

import numpy as np

from .errors import EmptyGraph, InvalidPartition
from .graph import Graph
from .partition import Partition


def _labels(g: Graph, partition) -> np.ndarray:
    labels = partition.labels if isinstance(partition, Partition) else np.asarray(partition)
    if labels.shape != (g.node_count,):
        raise InvalidPartition(f"partition has {labels.shape} labels for {g.node_count} nodes")
    if not np.issubdtype(labels.dtype, np.integer):
        raise InvalidPartition("community labels must be integers")
    return labels


def modularity(g: Graph, partition) -> float:
    """``Q = sum_c [W_in(c)/m - (S(c)/2m)^2]``.

    ``W_in`` counts each internal edge (self-loops included) once, ``S`` is the
    summed strength of a community and ``m`` the total edge weight.
    """
    labels = _labels(g, partition)
    m = g.total_weight
    if m <= 0:
        raise EmptyGraph("modularity is undefined for a graph without edge weight")
    # first-appearance ids make the summation order independent of label names
    comm = Partition(labels).canonical().labels
    k = comm.max() + 1
    internal = comm[g.src] == comm[g.dst]
    w_in = np.bincount(comm[g.src[internal]], weights=g.weight[internal], minlength=k).astype(np.float64)
    tot = np.bincount(comm, weights=g.strengths(), minlength=k)
    return math.fsum(w_in / m - (tot / (2.0 * m)) ** 2)
