"""Node visit orders: ascending centrality with configurable tie handling.

Random streams come from :func:`numpy.random.default_rng` (PCG64); an
integer seed always reproduces the same order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .centrality import CentralityScores, Measure
from .errors import InvalidInput

# Scores within this relative distance of each other (chained along the
# sorted sequence) are treated as tied. Absorbs summation-order noise, e.g.
# betweenness on vertex-transitive graphs differing in the last ulp.
SCORE_TIE_RTOL = 1e-12


class Strategy(str, enum.Enum):
    RANDOM = "random"
    NATURAL = "natural"
    DEG = "deg"
    PAG = "pag"
    CLO = "clo"
    BET = "bet"
    MY = "my"


class TieMode(str, enum.Enum):
    STABLE = "stable"
    RANDOM = "randomtie"

    @classmethod
    def _missing_(cls, value):
        if value == "random":
            return cls.RANDOM
        return None


# measures each score-based strategy needs
STRATEGY_MEASURES = {
    Strategy.DEG: (Measure.DEGREE,),
    Strategy.PAG: (Measure.PAGERANK,),
    Strategy.CLO: (Measure.CLOSENESS,),
    Strategy.BET: (Measure.BETWEENNESS,),
    Strategy.MY: (Measure.BETWEENNESS, Measure.CLOSENESS),
    Strategy.RANDOM: (),
    Strategy.NATURAL: (),
}


@dataclass(frozen=True)
class NodeOrder:
    sequence: np.ndarray
    strategy: Strategy
    tie_mode: TieMode = TieMode.STABLE

    def __post_init__(self):
        seq = np.asarray(self.sequence, dtype=np.int64)
        if not np.array_equal(np.sort(seq), np.arange(len(seq))):
            raise InvalidInput("order is not a permutation of 0..n-1")
        seq.setflags(write=False)
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "tie_mode", TieMode(self.tie_mode))

    def __len__(self):
        return len(self.sequence)

    def __iter__(self):
        return iter(self.sequence.tolist())


def as_rng(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def tie_groups(values, rtol: float = SCORE_TIE_RTOL) -> np.ndarray:
    """Rank of each node's tie group in ascending score order."""
    values = np.asarray(values, dtype=np.float64)
    if len(values) == 0:
        return np.zeros(0, dtype=np.int64)
    idx = np.argsort(values, kind="stable")
    ordered = values[idx]
    atol = rtol * max(1.0, float(np.max(np.abs(values))))
    rank_sorted = np.concatenate([[0], np.cumsum(np.diff(ordered) > atol)])
    ranks = np.empty(len(values), dtype=np.int64)
    ranks[idx] = rank_sorted
    return ranks


def _tie_key(n, tie_mode, rng):
    if TieMode(tie_mode) is TieMode.STABLE:
        return np.arange(n)
    return as_rng(rng).permutation(n)


def ascending_order(
    scores: CentralityScores, tie_mode=TieMode.STABLE, rng=None, strategy=None
) -> NodeOrder:
    """Visit low-centrality nodes first.

    Within a tie group nodes keep index order (``stable``) or are shuffled
    uniformly (``randomtie``).
    """
    values = scores.values
    groups = tie_groups(values)
    seq = np.lexsort((_tie_key(len(values), tie_mode, rng), groups))
    if strategy is None:
        strategy = _STRATEGY_OF_MEASURE[Measure(scores.measure)]
    return NodeOrder(seq, strategy, tie_mode)


def ascending_order_combined(
    bet: CentralityScores, clo: CentralityScores, tie_mode=TieMode.STABLE, rng=None
) -> NodeOrder:
    """Order by betweenness, then closeness, then the tie rule."""
    if len(bet) != len(clo):
        raise InvalidInput("betweenness and closeness lengths differ")
    key = _tie_key(len(bet), tie_mode, rng)
    seq = np.lexsort((key, tie_groups(clo.values), tie_groups(bet.values)))
    return NodeOrder(seq, Strategy.MY, tie_mode)


def random_order(n: int, rng=None) -> NodeOrder:
    return NodeOrder(as_rng(rng).permutation(n), Strategy.RANDOM, TieMode.RANDOM)


def natural_order(n: int) -> NodeOrder:
    return NodeOrder(np.arange(n), Strategy.NATURAL, TieMode.STABLE)


_STRATEGY_OF_MEASURE = {
    Measure.DEGREE: Strategy.DEG,
    Measure.PAGERANK: Strategy.PAG,
    Measure.CLOSENESS: Strategy.CLO,
    Measure.BETWEENNESS: Strategy.BET,
    Measure.COMBINED: Strategy.MY,
}


def order_for(strategy, n: int, scores: dict, tie_mode=TieMode.STABLE, rng=None) -> NodeOrder:
    """Build the order for ``strategy`` from precomputed ``scores`` (keyed by Measure)."""
    strategy = Strategy(strategy)
    if strategy is Strategy.RANDOM:
        return random_order(n, rng)
    if strategy is Strategy.NATURAL:
        return natural_order(n)
    if strategy is Strategy.MY:
        return ascending_order_combined(
            scores[Measure.BETWEENNESS], scores[Measure.CLOSENESS], tie_mode, rng
        )
    (measure,) = STRATEGY_MEASURES[strategy]
    return ascending_order(scores[measure], tie_mode, rng, strategy=strategy)
