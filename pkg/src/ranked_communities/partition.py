"""Crisp partitions: one community label per node."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Partition:
    labels: np.ndarray

    def __post_init__(self):
        labels = np.array(self.labels, dtype=np.int64)
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    def canonical(self) -> "Partition":
        """Relabel communities 0..k-1 in order of first appearance."""
        _, first, inverse = np.unique(self.labels, return_index=True, return_inverse=True)
        rank = np.empty(len(first), dtype=np.int64)
        rank[np.argsort(first, kind="stable")] = np.arange(len(first))
        return Partition(rank[inverse])

    @property
    def community_count(self) -> int:
        return len(np.unique(self.labels))

    def communities(self) -> list[list[int]]:
        canon = self.canonical().labels
        groups = [[] for _ in range(self.community_count)]
        for v, c in enumerate(canon.tolist()):
            groups[c].append(v)
        return groups

    def same_as(self, other: "Partition") -> bool:
        return np.array_equal(self.canonical().labels, other.canonical().labels)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(np.arange(n))
