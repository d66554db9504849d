"""Two-phase elimination-order test and the composed chordality pipeline."""

from __future__ import annotations

import numpy as np

from .._arraylex import peo_holds_array
from ..errors import InvalidOrdering
from ..graph import Graph, VertexOrdering
from ..peo import ChordalityVerdict, WitnessTriple, is_peo
from .engine import Arbitration, PhaseProgram, run_phase_program
from .lexbfs import _VECTOR_MIN_N, parallel_lexbfs


class _PeoState:
    """Shared rows for the two phases: left-neighbor bitsets and parents."""

    def __init__(self, g: Graph, ordering: VertexOrdering):
        self.g = g
        self.bits = g.adjacency_bits()
        self.pos0 = ordering.pos0
        self.ln = [0] * g.n
        self.parent = [0] * (g.n + 1)  # 0 = no left neighbor
        self.flag = True

    def apply(self, table, index, value):
        if table == "ln":
            self.ln[index - 1] = value
        elif table == "parent":
            self.parent[index] = value
        elif table == "flag":
            self.flag = value
        else:
            raise KeyError(f"unknown table {table!r}")


def _prepare(x, st: _PeoState, emit):
    x0 = x - 1
    px = st.pos0[x0]
    ln = 0
    best, best_pos = 0, -1
    bits = st.bits[x0]
    y0 = 0
    while bits:
        low = bits & -bits
        y0 = low.bit_length() - 1
        if st.pos0[y0] < px:
            ln |= low
            if st.pos0[y0] > best_pos:
                best_pos = int(st.pos0[y0])
                best = y0 + 1
        bits ^= low
    emit("ln", x, ln)
    emit("parent", x, best)


def _testing(x, st: _PeoState, emit):
    p = st.parent[x]
    if p == 0:
        return
    # every left neighbor but the parent itself must be a left neighbor of
    # the parent; the parent is excluded, it can never precede itself
    stray = st.ln[x - 1] & ~st.ln[p - 1] & ~(1 << (p - 1))
    if stray:
        emit("flag", 0, False)


def parallel_peo_test(
    g: Graph,
    ordering: VertexOrdering,
    *,
    backend: str = "auto",
    workers: int = 1,
) -> bool:
    """Barrier-phase elimination-order check; the verdict carries no witness.

    Phase 1 builds each vertex's left-neighbor row and parent; phase 2 has
    every vertex compare its row against its parent's and lower the shared
    flag on any stray. Flag writes race but all write False, so any
    arbitration yields the same verdict.
    """
    if ordering.n != g.n:
        raise InvalidOrdering(f"ordering covers {ordering.n} vertices, graph has {g.n}")
    if backend == "auto":
        backend = "tasks" if g.n < _VECTOR_MIN_N else "vector"
    if backend == "vector":
        return peo_holds_array(g, ordering)
    if backend != "tasks":
        raise ValueError(f"unknown backend {backend!r}")
    if g.n == 0:
        return True
    st = _PeoState(g, ordering)
    prog = PhaseProgram((_prepare, _testing), g.n)
    run_phase_program(prog, Arbitration.fixed_priority(), st, workers=workers)
    return st.flag


def parallel_is_chordal(
    g: Graph,
    arb: Arbitration,
    *,
    backend: str = "auto",
    workers: int = 1,
) -> ChordalityVerdict:
    """Parallel LexBFS followed by the parallel PEO test.

    A failing run reports the same deterministic witness the sequential
    scan would extract from the parallel ordering.
    """
    order = parallel_lexbfs(g, arb, backend=backend, workers=workers)
    if parallel_peo_test(g, order, backend=backend, workers=workers):
        return ChordalityVerdict(True, peo=order)
    _, witness = is_peo(g, order)
    return ChordalityVerdict(False, witness=witness)
