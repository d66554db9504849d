"""Sequential vertex-ordering algorithms: BFS, lexicographic BFS (two
implementations) and maximum-cardinality search.

Wherever the algorithms allow "any" candidate vertex, the choice is pinned
by a :class:`TieBreak` policy: ``LOWEST_INDEX`` (the default, fully
deterministic) or ``seeded(s)`` for reproducible randomized runs.

``lexbfs_labels`` keeps vertices in a doubly-linked chain of label classes;
a label's digit sequence is implicit in the class's chain position and is
only materialized when ``debug=True``. ``lexbfs_partition`` refines an
ordered vertex partition against each visited vertex's neighborhood, placing
the neighbor sub-class immediately before the remainder. Above a size
threshold both dispatch to one flat-array refinement with identical
LOWEST_INDEX output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import rng as _rng
from ._arraylex import lexbfs_array
from .errors import InvalidOrdering
from .graph import Graph, VertexOrdering

_ARRAY_MIN_N = 1024


@dataclass(frozen=True)
class TieBreak:
    """How to pick among equally eligible vertices."""

    seed: int | None = None

    def generator(self, label: str) -> np.random.Generator | None:
        if self.seed is None:
            return None
        return _rng.stream(self.seed, label)


LOWEST_INDEX = TieBreak()


def seeded(seed: int) -> TieBreak:
    return TieBreak(int(seed))


@dataclass(frozen=True)
class LexLabel:
    """A lexicographic label: digits appended over time, strictly falling."""

    digits: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.digits, self.digits[1:]):
            if b >= a:
                raise ValueError(f"label digits must strictly descend: {self.digits}")

    def extended(self, digit: int) -> "LexLabel":
        return LexLabel(self.digits + (digit,))

    def __lt__(self, other: "LexLabel") -> bool:
        return self.digits < other.digits

    def __le__(self, other: "LexLabel") -> bool:
        return self.digits <= other.digits


# ---------------------------------------------------------------------------
# plain breadth-first search


def bfs_order(g: Graph, tie_break: TieBreak = LOWEST_INDEX) -> VertexOrdering:
    """A breadth-first visit order (FIFO queue, component restarts)."""
    n = g.n
    adj = g.adjacency_lists0()
    gen = tie_break.generator("bfs")
    queued = bytearray(n)
    out: list[int] = []
    q: deque[int] = deque()
    next_start = 0
    remaining = n
    while remaining:
        if not q:
            if gen is None:
                while queued[next_start]:
                    next_start += 1
                s = next_start
            else:
                pool = [v for v in range(n) if not queued[v]]
                s = int(pool[gen.integers(len(pool))])
            queued[s] = 1
            q.append(s)
        x = q.popleft()
        out.append(x)
        remaining -= 1
        fresh = [y for y in adj[x] if not queued[y]]
        if gen is not None and len(fresh) > 1:
            gen.shuffle(fresh)
        for y in fresh:
            queued[y] = 1
            q.append(y)
    return VertexOrdering.from_zero_based(out)


# ---------------------------------------------------------------------------
# maximum cardinality search


def mcs_order(g: Graph, tie_break: TieBreak = LOWEST_INDEX) -> VertexOrdering:
    """Repeatedly visit an unvisited vertex with the most visited neighbors."""
    n = g.n
    adj = g.adjacency_lists0()
    gen = tie_break.generator("mcs")
    weight = [0] * n
    done = bytearray(n)
    out: list[int] = []
    for _ in range(n):
        best = -1
        if gen is None:
            x = -1
            for v in range(n):
                if not done[v] and weight[v] > best:
                    best = weight[v]
                    x = v
        else:
            ties: list[int] = []
            for v in range(n):
                if done[v]:
                    continue
                if weight[v] > best:
                    best = weight[v]
                    ties = [v]
                elif weight[v] == best:
                    ties.append(v)
            x = int(ties[gen.integers(len(ties))])
        done[x] = 1
        out.append(x)
        for y in adj[x]:
            if not done[y]:
                weight[y] += 1
    return VertexOrdering.from_zero_based(out)


# ---------------------------------------------------------------------------
# lexicographic BFS, linked label-class implementation


class _LabelChain:
    """Doubly-linked chain of label classes, ascending label order.

    Each class is itself a doubly-linked vertex list; the chain tail always
    holds the lexicographically largest label. A split at iteration i hangs
    the extended-label class immediately after its source, which is exactly
    where the longer label sorts.
    """

    __slots__ = (
        "n", "vprev", "vnext", "vclass", "head", "tail",
        "cfirst", "clast", "cprev", "cnext", "csplit_iter", "csplit_target",
        "labels",
    )

    def __init__(self, members: list[int], debug: bool):
        n = len(members)
        self.n = n
        self.vprev = [-1] * n
        self.vnext = [-1] * n
        self.vclass = [0] * n
        prev = -1
        for v in members:
            self.vprev[v] = prev
            if prev >= 0:
                self.vnext[prev] = v
            prev = v
        self.cfirst = [members[0] if members else -1]
        self.clast = [members[-1] if members else -1]
        self.cprev = [-1]
        self.cnext = [-1]
        self.csplit_iter = [-1]
        self.csplit_target = [-1]
        self.head = 0
        self.tail = 0
        self.labels: list[LexLabel] | None = [LexLabel()] if debug else None

    def new_class_after(self, c: int, digit: int) -> int:
        d = len(self.cfirst)
        self.cfirst.append(-1)
        self.clast.append(-1)
        nxt = self.cnext[c]
        self.cprev.append(c)
        self.cnext.append(nxt)
        self.cnext[c] = d
        if nxt >= 0:
            self.cprev[nxt] = d
        else:
            self.tail = d
        self.csplit_iter.append(-1)
        self.csplit_target.append(-1)
        if self.labels is not None:
            self.labels.append(self.labels[c].extended(digit))
        return d

    def unlink_class(self, c: int) -> None:
        p, x = self.cprev[c], self.cnext[c]
        if p >= 0:
            self.cnext[p] = x
        else:
            self.head = x
        if x >= 0:
            self.cprev[x] = p
        else:
            self.tail = p

    def detach_vertex(self, v: int) -> None:
        c = self.vclass[v]
        p, x = self.vprev[v], self.vnext[v]
        if p >= 0:
            self.vnext[p] = x
        if x >= 0:
            self.vprev[x] = p
        if self.cfirst[c] == v:
            self.cfirst[c] = x if self.clast[c] != v else -1
        if self.clast[c] == v:
            self.clast[c] = p if self.cfirst[c] != -1 else -1
        if self.cfirst[c] == -1:
            self.unlink_class(c)
        self.vprev[v] = self.vnext[v] = -1
        self.vclass[v] = -1

    def append_vertex(self, v: int, c: int) -> None:
        last = self.clast[c]
        self.vprev[v] = last
        self.vnext[v] = -1
        if last >= 0:
            self.vnext[last] = v
        else:
            self.cfirst[c] = v
        self.clast[c] = v
        self.vclass[v] = c

    def class_members(self, c: int) -> list[int]:
        out = []
        v = self.cfirst[c]
        while v >= 0:
            out.append(v)
            v = self.vnext[v]
        return out

    def chain_classes(self) -> list[int]:
        out = []
        c = self.head
        while c >= 0:
            out.append(c)
            c = self.cnext[c]
        return out


def lexbfs_labels(
    g: Graph,
    tie_break: TieBreak = LOWEST_INDEX,
    *,
    debug: bool = False,
    method: str = "auto",
) -> VertexOrdering:
    """Lexicographic BFS via linked label classes.

    With ``debug=True`` the label digits are materialized and the chain is
    checked after every step: labels strictly ascend along the chain and
    every label's digits strictly descend.
    """
    n = g.n
    if method == "auto":
        method = "array" if n >= _ARRAY_MIN_N and not debug else "linked"
    if method == "array":
        return _lexbfs_via_array(g, tie_break, "lexbfs-labels")
    if method != "linked":
        raise ValueError(f"unknown method {method!r}")
    gen = tie_break.generator("lexbfs-labels")
    adj = g.adjacency_lists0()
    chain = _LabelChain(list(range(n)), debug)
    visited = bytearray(n)
    out: list[int] = []
    for i in range(1, n + 1):
        t = chain.tail
        if gen is None:
            x = chain.cfirst[t]
        else:
            members = chain.class_members(t)
            x = int(members[gen.integers(len(members))])
        chain.detach_vertex(x)
        visited[x] = 1
        out.append(x)
        digit = n - i
        for y in adj[x]:
            if visited[y]:
                continue
            s = chain.vclass[y]
            if chain.csplit_iter[s] != i:
                target = chain.new_class_after(s, digit)
                chain.csplit_iter[s] = i
                chain.csplit_target[s] = target
            chain.detach_vertex(y)
            chain.append_vertex(y, chain.csplit_target[s])
        if debug:
            _check_chain(chain)
    return VertexOrdering.from_zero_based(out)


def _check_chain(chain: _LabelChain) -> None:
    labels = chain.labels
    assert labels is not None
    live = chain.chain_classes()
    for a, b in zip(live, live[1:]):
        assert labels[a] < labels[b], "chain labels must strictly ascend"
    for c in live:
        digs = labels[c].digits
        assert all(p > q for p, q in zip(digs, digs[1:]))


# ---------------------------------------------------------------------------
# lexicographic BFS, partition refinement


class PartitionList:
    """Ordered partition of the unvisited vertices.

    Classes are windows over one doubly-linked vertex sequence, kept
    contiguous; the first class holds the next vertices to visit. Splitting
    moves marked vertices into a new class placed immediately before the
    remainder of their old class.
    """

    __slots__ = (
        "n", "vprev", "vnext", "vhead", "class_of",
        "cfirst", "clast", "cprev", "cnext", "chead",
        "csplit_iter", "csplit_target",
    )

    def __init__(self, members: list[int]):
        n = len(members)
        self.n = n
        self.vprev = [-1] * n
        self.vnext = [-1] * n
        self.class_of = [0] * n
        prev = -1
        for v in members:
            self.vprev[v] = prev
            if prev >= 0:
                self.vnext[prev] = v
            prev = v
        self.vhead = members[0] if members else -1
        self.cfirst = [self.vhead]
        self.clast = [members[-1] if members else -1]
        self.cprev = [-1]
        self.cnext = [-1]
        self.chead = 0
        self.csplit_iter = [-1]
        self.csplit_target = [-1]

    # -- class chain ------------------------------------------------------

    def _new_class_before(self, c: int) -> int:
        d = len(self.cfirst)
        self.cfirst.append(-1)
        self.clast.append(-1)
        prev = self.cprev[c]
        self.cprev.append(prev)
        self.cnext.append(c)
        self.cprev[c] = d
        if prev >= 0:
            self.cnext[prev] = d
        else:
            self.chead = d
        self.csplit_iter.append(-1)
        self.csplit_target.append(-1)
        return d

    def _unlink_class(self, c: int) -> None:
        p, x = self.cprev[c], self.cnext[c]
        if p >= 0:
            self.cnext[p] = x
        else:
            self.chead = x
        if x >= 0:
            self.cprev[x] = p

    # -- vertex chain -------------------------------------------------------

    def _detach(self, v: int) -> None:
        c = self.class_of[v]
        p, x = self.vprev[v], self.vnext[v]
        if p >= 0:
            self.vnext[p] = x
        else:
            self.vhead = x
        if x >= 0:
            self.vprev[x] = p
        sole = self.cfirst[c] == v and self.clast[c] == v
        if sole:
            self.cfirst[c] = self.clast[c] = -1
        elif self.cfirst[c] == v:
            self.cfirst[c] = x
        elif self.clast[c] == v:
            self.clast[c] = p
        self.vprev[v] = self.vnext[v] = -1

    def _insert_before(self, v: int, anchor: int) -> None:
        p = self.vprev[anchor]
        self.vprev[v] = p
        self.vnext[v] = anchor
        self.vprev[anchor] = v
        if p >= 0:
            self.vnext[p] = v
        else:
            self.vhead = v

    def _insert_after(self, v: int, anchor: int) -> None:
        x = self.vnext[anchor]
        self.vnext[v] = x
        self.vprev[v] = anchor
        self.vnext[anchor] = v
        if x >= 0:
            self.vprev[x] = v

    # -- operations used by the search ----------------------------------------

    def pop_first(self) -> int:
        c = self.chead
        x = self.cfirst[c]
        self._detach(x)
        if self.cfirst[c] == -1:
            self._unlink_class(c)
        self.class_of[x] = -1
        return x

    def move_to_splitter(self, y: int, iteration: int) -> None:
        c = self.class_of[y]
        if self.csplit_iter[c] != iteration:
            d = self._new_class_before(c)
            self.csplit_iter[c] = iteration
            self.csplit_target[c] = d
        else:
            d = self.csplit_target[c]
        if self.cfirst[c] == y and self.clast[c] == y and self.cfirst[d] == -1:
            # whole class moves in one hop: the new class takes its place
            self.class_of[y] = d
            self.cfirst[d] = self.clast[d] = y
            self._unlink_class(c)
            return
        self._detach(y)
        if self.cfirst[d] == -1:
            self._insert_before(y, self.cfirst[c])
            self.cfirst[d] = self.clast[d] = y
        else:
            self._insert_after(y, self.clast[d])
            self.clast[d] = y
        self.class_of[y] = d
        if self.cfirst[c] == -1:
            self._unlink_class(c)

    # -- inspection -------------------------------------------------------------

    def classes(self) -> list[list[int]]:
        out = []
        c = self.chead
        while c >= 0:
            members = []
            v = self.cfirst[c]
            while v >= 0:
                members.append(v)
                if v == self.clast[c]:
                    break
                v = self.vnext[v]
            out.append(members)
            c = self.cnext[c]
        return out

    def validate(self) -> None:
        """Assert the contiguity invariant: the vertex chain is exactly the
        concatenation of the class windows, in class order."""
        flat: list[int] = []
        for members in self.classes():
            assert members, "live classes must be nonempty"
            flat.extend(members)
        chain = []
        v = self.vhead
        while v >= 0:
            chain.append(v)
            v = self.vnext[v]
        assert chain == flat, "classes must tile the vertex chain contiguously"
        for members in self.classes():
            for v in members:
                assert self.class_of[v] >= 0


def lexbfs_partition(
    g: Graph,
    tie_break: TieBreak = LOWEST_INDEX,
    *,
    method: str = "auto",
    _watch=None,
) -> VertexOrdering:
    """Lexicographic BFS by partition refinement."""
    n = g.n
    if method == "auto":
        method = "array" if n >= _ARRAY_MIN_N and _watch is None else "linked"
    if method == "array":
        return _lexbfs_via_array(g, tie_break, "lexbfs-partition")
    if method != "linked":
        raise ValueError(f"unknown method {method!r}")
    gen = tie_break.generator("lexbfs-partition")
    members = list(range(n))
    if gen is not None:
        gen.shuffle(members)
    adj = g.adjacency_lists0()
    part = PartitionList(members)
    visited = bytearray(n)
    out: list[int] = []
    for i in range(1, n + 1):
        x = part.pop_first()
        visited[x] = 1
        out.append(x)
        for y in adj[x]:
            if not visited[y]:
                part.move_to_splitter(y, i)
        if _watch is not None:
            _watch(part)
    return VertexOrdering.from_zero_based(out)


def _lexbfs_via_array(g: Graph, tie_break: TieBreak, label: str) -> VertexOrdering:
    gen = tie_break.generator(label)
    if gen is None:
        initial = np.arange(g.n, dtype=np.int64)
    else:
        initial = gen.permutation(g.n).astype(np.int64)
    return VertexOrdering.from_zero_based(lexbfs_array(g, initial).tolist())
