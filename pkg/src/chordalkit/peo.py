"""Perfect-elimination-order test and the sequential chordality pipeline.

An ordering is a PEO when every vertex's left neighborhood (its neighbors
placed earlier in the ordering) induces a clique. The linear-time test
checks, for each vertex y with parent p (the latest left neighbor), that
``ln[y] - {p}`` is contained in ``ln[p]``, using a reusable visited buffer
that is unmarked after every parent. A failing triple is returned as a
:class:`WitnessTriple` and can be re-verified directly against the
adjacency matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._arraylex import _left_rows_packed, peo_holds_array
from .errors import InvalidOrdering
from .graph import Graph, VertexOrdering
from .search import LOWEST_INDEX, TieBreak, lexbfs_labels, lexbfs_partition

_ARRAY_MIN_N = 1024


@dataclass(frozen=True)
class WitnessTriple:
    """Proof that an ordering is not a PEO.

    z and p are both left neighbors of v, p the latest one, yet z and p are
    not adjacent — so ln[v] is no clique.
    """

    v: int
    p: int
    z: int

    def verify(self, g: Graph, ordering: VertexOrdering) -> bool:
        pos = ordering.pi_inv
        return (
            g.has_edge(self.v, self.p)
            and g.has_edge(self.v, self.z)
            and not g.has_edge(self.p, self.z)
            and pos(self.z) < pos(self.p) < pos(self.v)
        )


@dataclass
class ScanStats:
    """Adjacency/left-list element reads consumed by one is_peo call."""

    reads: int = 0
    budget: int = 0

    def within_budget(self) -> bool:
        return self.reads <= self.budget


@dataclass(frozen=True)
class ChordalityVerdict:
    chordal: bool
    peo: VertexOrdering | None = None
    witness: WitnessTriple | None = None

    def __post_init__(self):
        if self.chordal and (self.peo is None or self.witness is not None):
            raise ValueError("chordal verdict must carry a PEO and no witness")
        if not self.chordal and (self.witness is None or self.peo is not None):
            raise ValueError("non-chordal verdict must carry a witness and no PEO")


def is_peo(
    g: Graph,
    ordering: VertexOrdering,
    *,
    stats: ScanStats | None = None,
    method: str = "auto",
) -> tuple[bool, WitnessTriple | None]:
    """Test whether ``ordering`` is a perfect elimination order of ``g``.

    On failure the returned witness is the first one met scanning parents
    in ascending vertex order, their children in ascending order, and each
    child's left list in ascending order. ``stats``, if given, receives the
    list-element read count of the scan together with its 4-scans budget
    (only the list-based method is instrumented).
    """
    if ordering.n != g.n:
        raise InvalidOrdering(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    if method == "auto":
        method = "array" if g.n >= _ARRAY_MIN_N and stats is None else "lists"
    if method == "array":
        if peo_holds_array(g, ordering):
            return True, None
        return False, _first_witness_big(g, ordering)
    if method != "lists":
        raise ValueError(f"unknown method {method!r}")
    return _is_peo_lists(g, ordering, stats)


def _is_peo_lists(g, ordering, stats):
    n = g.n
    adj = g.adjacency_lists0()
    pos0 = ordering.pos0
    reads = 0

    # scan 1: split each adjacency list into the left part, noting the parent
    ln: list[list[int]] = [[] for _ in range(n)]
    parent = [-1] * n
    for v in range(n):
        pv = pos0[v]
        best = -1
        best_pos = -1
        for w in adj[v]:
            reads += 1
            pw = pos0[w]
            if pw < pv:
                ln[v].append(w)
                if pw > best_pos:
                    best_pos = pw
                    best = w
        parent[v] = best

    # scans 2-4: mark each parent's left list, test the children, unmark
    visited = bytearray(n)
    witness = None
    for x in range(n):
        for w in ln[x]:
            reads += 1
            visited[w] = 1
        for y in adj[x]:
            reads += 1
            if parent[y] != x:
                continue
            for z in ln[y]:
                reads += 1
                if z != x and not visited[z]:
                    witness = WitnessTriple(y + 1, x + 1, z + 1)
                    break
            if witness:
                break
        if witness:
            break
        for w in ln[x]:
            reads += 1
            visited[w] = 0
    if stats is not None:
        stats.reads = reads
        stats.budget = 4 * 2 * g.m
    return (witness is None), witness


def _first_witness_big(g: Graph, ordering: VertexOrdering) -> WitnessTriple:
    """Deterministic first witness without materializing adjacency lists."""
    n = g.n
    order0 = ordering.order0
    pos0 = ordering.pos0
    _, parent_pos = _left_rows_packed(g, ordering)
    parent_vertex = np.full(n, -1, dtype=np.int64)
    rooted = parent_pos >= 0
    parent_vertex[order0[rooted.nonzero()[0]]] = order0[parent_pos[rooted]]
    bits = g.adjacency_bits()
    before = 0
    ln_bits = [0] * n
    for v in order0.tolist():
        ln_bits[v] = bits[v] & before
        before |= 1 << v
    for x in range(n):
        row = np.unpackbits(g._packed[x], bitorder="little", count=n)
        for y in np.flatnonzero((parent_vertex == x) & (row == 1)).tolist():
            stray = ln_bits[y] & ~bits[x] & ~(1 << x)
            if stray:
                z = (stray & -stray).bit_length() - 1
                return WitnessTriple(y + 1, x + 1, z + 1)
    raise AssertionError("witness requested for an ordering that is a PEO")


def is_chordal(
    g: Graph,
    algo: str = "partition",
    tie_break: TieBreak = LOWEST_INDEX,
    *,
    method: str = "auto",
) -> ChordalityVerdict:
    """Full sequential pipeline: LexBFS, then the PEO test on its output.

    ``method`` picks the implementation pair: "auto" (size-based),
    "reference" (linked/list structures) or "array".
    """
    if method not in ("auto", "reference", "array"):
        raise ValueError(f"unknown method {method!r}")
    lex_method = "linked" if method == "reference" else method
    peo_method = "lists" if method == "reference" else method
    if algo == "partition":
        order = lexbfs_partition(g, tie_break, method=lex_method)
    elif algo == "labels":
        order = lexbfs_labels(g, tie_break, method=lex_method)
    else:
        raise ValueError(f"unknown LexBFS variant {algo!r}")
    ok, witness = is_peo(g, order, method=peo_method)
    if ok:
        return ChordalityVerdict(True, peo=order)
    return ChordalityVerdict(False, witness=witness)
