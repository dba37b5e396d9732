"""Seeded benchmark harness reproducing the ring-lattice modularity tables.

On a ring lattice with no rewiring the generator is deterministic, so "1000
graphs" means 1000 seeded repetitions of the randomised parts (random
orders, random tie breaks) on one lattice.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .centrality import compute
from .errors import NoConvergence
from .graph import Graph, LatticeParams, ring_lattice
from .label_propagation import label_propagation
from .multilevel import multilevel
from .ordering import STRATEGY_MEASURES, Strategy, TieMode, order_for
from .quality import modularity

METHODS = ("lp", "multilevel")
METHOD_IDS = {"lp": 0, "multilevel": 1}
STRATEGY_IDS = {s: i for i, s in enumerate(Strategy)}

LP_COLUMNS = (Strategy.RANDOM, Strategy.DEG, Strategy.PAG, Strategy.CLO, Strategy.BET, Strategy.MY)
ML_COLUMNS = (Strategy.NATURAL, Strategy.DEG, Strategy.PAG, Strategy.CLO, Strategy.BET, Strategy.MY)
PAPER_LATTICES = ((50, 4), (50, 5), (50, 6), (100, 7), (100, 8), (100, 9))

CSV_FIELDS = ("method", "order", "tie", "n", "nei", "reps", "seed",
              "mean_q", "std_q", "min_q", "max_q", "nonconverged")


@dataclass(frozen=True)
class BenchConfig:
    method: str
    strategies: tuple
    n: int
    nei: int
    reps: int = 1000
    master_seed: int = 0
    tie_mode: TieMode = TieMode.STABLE
    output_format: str = "table"
    graph: Graph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "strategies", tuple(Strategy(s) for s in self.strategies))
        object.__setattr__(self, "tie_mode", TieMode(self.tie_mode))
        if self.graph is None:
            LatticeParams(self.n, self.nei)

    def build_graph(self) -> Graph:
        return self.graph if self.graph is not None else ring_lattice(LatticeParams(self.n, self.nei))

    @property
    def label(self) -> str:
        return f"n={self.n}, nei={self.nei}"


@dataclass
class BenchResult:
    method: str
    strategy: Strategy
    tie_mode: TieMode
    n: int
    nei: int
    reps: int
    seed: int
    mean_q: float = math.nan
    stddev_q: float = math.nan
    min_q: float = math.nan
    max_q: float = math.nan
    rep_count: int = 0
    non_convergence_count: int = 0
    error: str | None = None
    values: np.ndarray | None = field(default=None, repr=False)

    @property
    def stderr_q(self) -> float:
        k = self.rep_count - self.non_convergence_count
        return self.stddev_q / math.sqrt(k) if k > 0 else math.nan

    def csv_row(self) -> dict:
        return {
            "method": self.method, "order": self.strategy.value, "tie": self.tie_mode.value,
            "n": self.n, "nei": self.nei, "reps": self.reps, "seed": self.seed,
            "mean_q": repr(self.mean_q), "std_q": repr(self.stddev_q),
            "min_q": repr(self.min_q), "max_q": repr(self.max_q),
            "nonconverged": self.non_convergence_count,
        }


def rep_seed(master_seed: int, method: str, strategy, n: int, nei: int, rep: int) -> int:
    """64-bit seed for one repetition.

    The tuple ``(master_seed, method id, strategy id, n, nei, rep)`` is hashed
    by :class:`numpy.random.SeedSequence`; its first 64-bit output word is the
    seed.
    """
    ss = np.random.SeedSequence(
        [master_seed, METHOD_IDS[method], STRATEGY_IDS[Strategy(strategy)], n, nei, rep]
    )
    return int(ss.generate_state(1, np.uint64)[0])


def rep_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    """Independent (order, algorithm) generators derived from a rep seed."""
    order_ss, algo_ss = np.random.SeedSequence(seed).spawn(2)
    return np.random.default_rng(order_ss), np.random.default_rng(algo_ss)


def summarize(values) -> tuple[float, float, float, float]:
    """Two-pass mean and sample standard deviation, plus min and max."""
    x = np.asarray(values, dtype=np.float64)
    if len(x) == 0:
        return math.nan, math.nan, math.nan, math.nan
    mean = math.fsum(x) / len(x)
    std = math.sqrt(math.fsum((x - mean) ** 2) / (len(x) - 1)) if len(x) > 1 else 0.0
    return mean, std, float(x.min()), float(x.max())


def run_cell(config: BenchConfig, strategy, *, keep_values: bool = False, on_rep=None) -> BenchResult:
    """Run every repetition of one (config, strategy) cell.

    ``on_rep(rep, graph, order, outcome)`` is called after each converged
    repetition; ``outcome`` is the partition for label propagation and a
    :class:`~ranked_communities.multilevel.MultilevelResult` for multilevel.
    """
    strategy = Strategy(strategy)
    g = config.build_graph()
    result = BenchResult(config.method, strategy, config.tie_mode, g.node_count, config.nei,
                         config.reps, config.master_seed)
    scores = {m: compute(g, m) for m in STRATEGY_MEASURES[strategy]}
    run = label_propagation if config.method == "lp" else multilevel
    qs = []
    failed = 0
    for r in range(config.reps):
        order_rng, algo_rng = rep_streams(
            rep_seed(config.master_seed, config.method, strategy, g.node_count, config.nei, r)
        )
        order = order_for(strategy, g.node_count, scores, config.tie_mode, order_rng)
        try:
            if on_rep is not None and config.method == "multilevel":
                outcome = multilevel(g, order, algo_rng, return_levels=True)
                part = outcome.partition
            else:
                part = outcome = run(g, order, algo_rng)
        except NoConvergence:
            failed += 1
            continue
        if on_rep is not None:
            on_rep(r, g, order, outcome)
        qs.append(modularity(g, part))
    result.mean_q, result.stddev_q, result.min_q, result.max_q = summarize(qs)
    result.rep_count = config.reps
    result.non_convergence_count = failed
    if keep_values:
        result.values = np.asarray(qs)
    return result


def _cell_job(args):
    config, strategy = args
    try:
        return run_cell(config, strategy)
    except Exception as exc:  # reported per cell, the suite keeps going
        return BenchResult(config.method, Strategy(strategy), config.tie_mode, config.n,
                           config.nei, config.reps, config.master_seed,
                           error=f"{type(exc).__name__}: {exc}")


def run_suite(grid, workers: int = 1) -> list[BenchResult]:
    """Run every (config, strategy) cell; results follow grid order."""
    jobs = [(cfg, s) for cfg in grid for s in cfg.strategies]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell_job, jobs))
    return [_cell_job(job) for job in jobs]


def paper_grid(reps: int = 1000, seed: int = 0, tie_mode=TieMode.STABLE) -> list[BenchConfig]:
    grid = []
    for method, columns in (("lp", LP_COLUMNS), ("multilevel", ML_COLUMNS)):
        for n, nei in PAPER_LATTICES:
            grid.append(BenchConfig(method, columns, n, nei, reps, seed, tie_mode))
    return grid


def format_csv(results) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for res in results:
        writer.writerow(res.csv_row())
    return buf.getvalue()


def format_table(results) -> str:
    """One block per (method, tie mode): rows per lattice, columns per order."""
    blocks: dict = {}
    for res in results:
        block = blocks.setdefault((res.method, res.tie_mode), {"rows": {}, "cols": []})
        if res.strategy not in block["cols"]:
            block["cols"].append(res.strategy)
        block["rows"].setdefault(f"n={res.n}, nei={res.nei}", {})[res.strategy] = res
    out = []
    for (method, tie), block in blocks.items():
        any_res = next(iter(next(iter(block["rows"].values())).values()))
        out.append(f"# {method}: mean modularity over {any_res.reps} seeded repetitions "
                   f"on one deterministic lattice (seed={any_res.seed}, ties={tie.value})")
        header = ["Parameters"] + [f"{s.value} ord." for s in block["cols"]]
        lines = [header]
        notes = []
        for row, cells in block["rows"].items():
            line = [row]
            for s in block["cols"]:
                res = cells.get(s)
                if res is None:
                    line.append("")
                elif res.error:
                    line.append("ERROR")
                    notes.append(f"{row} {s.value}: {res.error}")
                else:
                    line.append(f"{res.mean_q:.4f}")
                    if res.non_convergence_count:
                        notes.append(f"{row} {s.value}: {res.non_convergence_count} "
                                     "non-converged reps excluded")
            lines.append(line)
        widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
        for line in lines:
            out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
        out.extend(f"# {note}" for note in notes)
        out.append("")
    return "\n".join(out)


def with_reps(grid, reps):
    return [replace(cfg, reps=reps) for cfg in grid]
