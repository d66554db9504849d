"""Benchmark matrix over the five graph classes, reported as CSV rows.

Each cell (class, size, rep) generates a fresh seeded graph and runs both
recognition pipelines on it. Two phases are timed per run: ``algo`` wraps
only the pipeline, ``total`` additionally includes rebuilding the graph
from its edge arrays — the in-memory stand-in for reading an input file,
so the two phases mirror the usual with/without-input-time reporting
split. Rep 0 of every cell is a discarded warm-up. The two pipelines must
agree on every cell; a disagreement aborts the whole run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import VerdictMismatch
from .generate import (
    gen_chordal_random,
    gen_clique,
    gen_dense_random,
    gen_sparse_random,
    gen_tree,
)
from .graph import Graph
from .parallel import Arbitration, parallel_is_chordal
from .peo import ChordalityVerdict, is_chordal

CSV_HEADER = "class,n,m,algo,rep,seed,phase,ms"
CLASSES = ("clique", "dense", "sparse", "tree", "chordal")
ALGOS = ("seq-partition", "parallel")
DEFAULT_SIZES = (1000, 2000, 4000)
DEFAULT_DENSE_P = 0.5
DEFAULT_CHORDAL_K = 8


def make_graph(cls: str, n: int, seed: int, param: float | None = None) -> Graph:
    """Build one benchmark graph; ``param`` is p for dense, k for chordal."""
    if cls == "clique":
        return gen_clique(n)
    if cls == "dense":
        return gen_dense_random(n, DEFAULT_DENSE_P if param is None else float(param), seed)
    if cls == "sparse":
        return gen_sparse_random(n, seed)
    if cls == "tree":
        return gen_tree(n, seed)
    if cls == "chordal":
        k = DEFAULT_CHORDAL_K if param is None else int(param)
        return gen_chordal_random(n, min(k, n - 1), seed)
    raise ValueError(f"unknown graph class {cls!r}")


@dataclass(frozen=True)
class BenchRow:
    cls: str
    n: int
    m: int
    algo: str
    rep: int
    seed: int
    phase: str
    ms: float

    def csv(self) -> str:
        return (
            f"{self.cls},{self.n},{self.m},{self.algo},"
            f"{self.rep},{self.seed},{self.phase},{self.ms:.3f}"
        )


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    return "\n".join([CSV_HEADER] + [r.csv() for r in rows]) + "\n"


def _rebuild(n: int, u: np.ndarray, v: np.ndarray) -> Graph:
    if u.size == 0:
        from ._bitops import row_width

        return Graph(n, np.zeros((n, row_width(n)), dtype=np.uint8), 0)
    return Graph._from_numpy_edges(n, u, v)


def _run_pipeline(
    algo: str, g: Graph, arb: Arbitration, workers: int
) -> ChordalityVerdict:
    if algo == "parallel":
        return parallel_is_chordal(g, arb, workers=workers)
    if algo == "seq-partition":
        return is_chordal(g, algo="partition")
    if algo == "seq-labels":
        return is_chordal(g, algo="labels")
    raise ValueError(f"unknown benchmark algo {algo!r}")


def run_benchmark(
    classes: Sequence[str] = CLASSES,
    sizes: Sequence[int] = DEFAULT_SIZES,
    *,
    reps: int = 3,
    seed: int = 0,
    workers: int = 1,
    param: float | None = None,
    arb: Arbitration | None = None,
    log: Callable[[str], None] | None = None,
) -> list[BenchRow]:
    """Time both pipelines over the class x size matrix.

    Returns two rows (phases ``total`` and ``algo``) per recorded rep per
    algorithm. Raises :class:`VerdictMismatch` if the pipelines ever
    disagree.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    arbitration = arb if arb is not None else Arbitration.fixed_priority()
    rows: list[BenchRow] = []
    for cls in classes:
        for n in sizes:
            for rep in range(reps + 1):  # rep 0 is the warm-up
                graph_seed = seed + rep
                g = make_graph(cls, n, graph_seed, param)
                u, v = g.edge_arrays()
                verdicts: dict[str, bool] = {}
                for algo in ALGOS:
                    t0 = time.perf_counter()
                    rebuilt = _rebuild(n, u, v)
                    t1 = time.perf_counter()
                    verdict = _run_pipeline(algo, rebuilt, arbitration, workers)
                    t2 = time.perf_counter()
                    verdicts[algo] = verdict.chordal
                    if rep == 0:
                        continue
                    rows.append(
                        BenchRow(cls, n, g.m, algo, rep, graph_seed, "total", (t2 - t0) * 1e3)
                    )
                    rows.append(
                        BenchRow(cls, n, g.m, algo, rep, graph_seed, "algo", (t2 - t1) * 1e3)
                    )
                answers = {verdicts[a] for a in ALGOS}
                if len(answers) != 1:
                    raise VerdictMismatch(
                        f"{cls} n={n} rep={rep} seed={graph_seed}: {verdicts}"
                    )
                if log is not None:
                    word = "chordal" if answers.pop() else "non-chordal"
                    log(f"{cls} n={n} rep={rep}: verdicts agree ({word})")
    return rows
