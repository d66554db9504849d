"""Barrier-phase execution engine with replayable race arbitration.

A phase program is a list of per-vertex task bodies. Within one phase every
task reads the same shared state (the state as of the previous barrier) and
emits writes; no write is applied until the phase ends. When several tasks
write the same cell in the same phase, an :class:`Arbitration` policy picks
the surviving writer — either a seeded hash (replayable stand-in for
hardware nondeterminism) or a fixed priority by task id. The final state is
therefore a pure function of (program, arbitration, initial state),
regardless of worker count or scheduling.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .._bitops import label_hash, mix64, mix64_np, splitmix64, splitmix64_np
from ..errors import PhaseTaskError

NULL = -1

TaskBody = Callable[[int, object, Callable[[str, int, object], None]], None]


@dataclass(frozen=True)
class Arbitration:
    """Policy resolving racy same-cell writes within a phase."""

    mode: str  # "seeded" or "fixed"
    seed: int | None = None
    direction: str = "ascending"

    @classmethod
    def seeded(cls, seed: int) -> "Arbitration":
        return cls("seeded", seed=int(seed))

    @classmethod
    def fixed_priority(cls, direction: str = "ascending") -> "Arbitration":
        if direction not in ("ascending", "descending"):
            raise ValueError(f"direction must be ascending or descending, got {direction!r}")
        return cls("fixed", direction=direction)

    def choose(self, table: str, index: int, epoch: int, writers) -> int:
        """Winning task id for one contested cell."""
        if self.mode == "fixed":
            return min(writers) if self.direction == "ascending" else max(writers)
        cell = mix64(label_hash(table), index)
        prefix = mix64(self.seed, epoch, cell)
        return max(writers, key=lambda w: (splitmix64(prefix ^ w), w))

    def winners_grouped(
        self, table: str, epoch: int, groups: np.ndarray, indices: np.ndarray, writers: np.ndarray
    ) -> tuple[np.ndarray, np.ndarray]:
        """Vectorized form of :meth:`choose` over many cells at once.

        ``groups`` assigns each candidate to its cell, ``indices`` is each
        candidate's cell index (the hash input), ``writers`` the 1-based
        task ids. Returns (group ids, winning writers), one row per group.
        Must rank candidates exactly like ``choose`` so the array backend
        replays the per-task engine bit for bit.
        """
        if self.mode == "fixed":
            key = -writers if self.direction == "ascending" else writers
        else:
            table_prefix = splitmix64(label_hash(table))
            cell = mix64_np(table_prefix, indices.astype(np.uint64))
            prefix = splitmix64_np(np.uint64(mix64(self.seed, epoch)) ^ cell)
            key = splitmix64_np(prefix ^ writers.astype(np.uint64))
        sortidx = np.lexsort((writers, key, groups))
        gs = groups[sortidx]
        last = np.flatnonzero(np.r_[gs[1:] != gs[:-1], True])
        return gs[last], writers[sortidx][last]


@dataclass(frozen=True)
class PhaseProgram:
    phases: tuple[TaskBody, ...]
    n_tasks: int


def _run_tasks(task, xs, state, epoch):
    out = []
    for x in xs:
        emitted: list[tuple[str, int, object]] = []
        try:
            task(x, state, lambda table, index, value: emitted.append((table, index, value)))
        except Exception as exc:  # noqa: BLE001 - reported with phase context
            raise PhaseTaskError(epoch, x, exc) from exc
        out.append(emitted)
    return out


def run_phase_program(
    prog: PhaseProgram,
    arb: Arbitration,
    state,
    *,
    workers: int = 1,
    epoch_base: int = 0,
    observer=None,
):
    """Run every phase of ``prog`` over tasks 1..n_tasks with barriers between.

    ``state`` must provide ``apply(table, index, value)``; tasks receive it
    read-only (by contract) plus an ``emit`` callback. ``observer``, if
    given, is called after each phase as ``observer(phase_index, state,
    writes)`` where ``writes`` maps (table, index) to {writer: value}.
    """
    n = prog.n_tasks
    ids = range(1, n + 1)
    for k, task in enumerate(prog.phases):
        epoch = epoch_base + k
        if workers <= 1 or n < 64:
            per_task = _run_tasks(task, ids, state, epoch)
        else:
            chunk = (n + workers - 1) // workers
            chunks = [range(lo, min(lo + chunk, n + 1)) for lo in range(1, n + 1, chunk)]
            with ThreadPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(lambda xs: _run_tasks(task, xs, state, epoch), chunks))
            per_task = [e for part in parts for e in part]
        writes: dict[tuple[str, int], dict[int, object]] = {}
        for x, emitted in zip(ids, per_task):
            for table, index, value in emitted:
                writes.setdefault((table, index), {})[x] = value
        for (table, index), candidates in writes.items():
            if len(candidates) == 1:
                ((_, value),) = candidates.items()
            else:
                value = candidates[arb.choose(table, index, epoch, candidates)]
            state.apply(table, index, value)
        if observer is not None:
            observer(k, state, writes)
    return state


class DictState:
    """Minimal state for engine tests: named tables of index -> value."""

    def __init__(self):
        self.tables: dict[str, dict[int, object]] = {}

    def apply(self, table: str, index: int, value) -> None:
        self.tables.setdefault(table, {})[index] = value

    def get(self, table: str, index: int, default=None):
        return self.tables.get(table, {}).get(index, default)
