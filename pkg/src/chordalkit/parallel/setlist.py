"""Shared state for the per-task LexBFS backend.

Set ids are virtual and never reused: the initial set is 0 and iteration i
gives vertex x the fresh id ``i*n + x``, so a full run needs ``n*(n+1) + 1``
slots. At desk scale the next/counter tables are flat lists of exactly that
size; above ``flat_cap`` cells they fall back to dicts with the same
virtual-id keys.

With ``adj_reuse=True`` the counter table is instead overlaid on a mutable
copy of the adjacency matrix: iteration i's fresh counters live in the
matrix row of the vertex visited at iteration i. That row is dead for
adjacency purposes from then on (only active vertices are ever probed, and
adjacency probes read cell (x, current), never a visited vertex's row), so
the overlay is sound; the original graph is left untouched and the copy is
simply dropped after the run.
"""

from __future__ import annotations

import numpy as np

from ..graph import Graph
from ..search import LexLabel
from .engine import NULL


class SetList:
    def __init__(
        self,
        g: Graph,
        *,
        debug_labels: bool = False,
        adj_reuse: bool = False,
        flat_cap: int = 6_000_000,
    ):
        n = g.n
        self.g = g
        self.n = n
        size = n * (n + 1) + 1
        self.flat = size <= flat_cap
        self.next_link = [NULL] * size if self.flat else {}
        self.set_of = [0] * n
        self.active = [True] * n
        self.current = 1
        self.order: list[int] = []
        self.old_next = [NULL] * n
        self.new_next = [NULL] * n
        self.iteration = 0
        self.labels: dict[int, LexLabel] | None = {0: LexLabel()} if debug_labels else None
        self._allocated: set[int] = set()
        self._fresh_now: set[int] = set()
        self.adj_reuse = adj_reuse
        if adj_reuse:
            self._adj_cells = np.unpackbits(g._packed, axis=1, bitorder="little", count=n)
            self._iter_row = [0] * (n + 1)  # iteration -> matrix row hosting its counters
            self._counter0 = 0  # the initial set's counter sits outside the matrix
            self.counter = None
        else:
            self.counter = bytearray(size) if self.flat else {}

    # -- reads used by the kernel tasks ------------------------------------

    def is_active(self, x: int) -> bool:
        return self.active[x - 1]

    def set_id(self, x: int) -> int:
        return self.set_of[x - 1]

    def next(self, s: int) -> int:
        if s == NULL:
            return NULL
        if self.flat:
            return self.next_link[s]
        return self.next_link.get(s, NULL)

    def count(self, s: int) -> int:
        if self.adj_reuse:
            if s == 0:
                return self._counter0
            i, col = divmod(s - 1, self.n)
            return int(self._adj_cells[self._iter_row[i], col])
        if self.flat:
            return self.counter[s]
        return self.counter.get(s, 0)

    def adjacent(self, x: int, y: int) -> bool:
        if self.adj_reuse:
            return bool(self._adj_cells[x - 1, y - 1])
        return self.g.has_edge(x, y)

    def old(self, x: int) -> int:
        return self.old_next[x - 1]

    def fresh(self, x: int) -> int:
        return self.new_next[x - 1]

    # -- write dispatch (called by the engine after arbitration) -------------

    def apply(self, table: str, index: int, value) -> None:
        if table == "next_link":
            if (
                self.labels is not None
                and value in self._fresh_now
                and value not in self.labels
            ):
                self.labels[value] = self.labels[index].extended(self.n - self.iteration)
            self.next_link[index] = value
        elif table == "counter":
            self._set_count(index, value)
        elif table == "set_of":
            self.set_of[index - 1] = value
        elif table == "active":
            self.active[index - 1] = value
        elif table == "current":
            self.current = value
        elif table == "order":
            self.order.append(value)
        elif table == "old_next":
            self.old_next[index - 1] = value
        elif table == "new_next":
            if value in self._allocated:
                raise AssertionError(f"set id {value} allocated twice")
            self._allocated.add(value)
            self._fresh_now.add(value)
            self.new_next[index - 1] = value
        else:
            raise KeyError(f"unknown table {table!r}")

    def _set_count(self, s: int, value: int) -> None:
        if self.adj_reuse:
            if s == 0:
                self._counter0 = value
            else:
                i, col = divmod(s - 1, self.n)
                self._adj_cells[self._iter_row[i], col] = value
        else:
            self.counter[s] = value

    def begin_iteration(self, i: int) -> None:
        self.iteration = i
        self._fresh_now = set()
        if self.adj_reuse:
            self._iter_row[i] = self.current - 1

    # -- audit helpers -------------------------------------------------------

    def live_sets(self) -> dict[int, int]:
        """Map of set id -> number of active members."""
        members: dict[int, int] = {}
        for v in range(self.n):
            if self.active[v]:
                s = self.set_of[v]
                members[s] = members.get(s, 0) + 1
        return members

    def chain_from_live(self) -> list[int]:
        """The list as reachable from live sets, in next_link order."""
        members = self.live_sets()
        nodes: set[int] = set()
        for s in members:
            while s != NULL and s not in nodes:
                nodes.add(s)
                s = self.next(s)
        if not nodes:
            return []
        pointed = {self.next(s) for s in nodes}
        heads = [s for s in nodes if s not in pointed]
        assert len(heads) == 1, f"list must have one entry point, found {heads}"
        chain = []
        s = heads[0]
        while s != NULL:
            chain.append(s)
            assert len(chain) <= len(nodes), "next_link chain has a cycle"
            s = self.next(s)
        assert set(chain) == nodes, "chain walk must cover every reachable set"
        return chain
