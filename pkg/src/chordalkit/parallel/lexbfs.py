"""Barrier-synchronized LexBFS.

Each of n iterations visits the ``current`` vertex and refreshes the set
list in four phases:

1. record/deactivate current; every active vertex zeroes its set's counter,
   saves its set's next pointer and claims a fresh set id;
2. every active neighbor of current splices its fresh set right behind its
   own set (racy; arbitration picks the survivor per set);
3. the neighbors hop into the surviving spliced set, every active vertex
   counts its set as nonempty and re-saves its set's next pointer;
4. each vertex whose saved successor counted empty bypasses it, and whoever
   then sees no successor offers itself as the next current (racy; all
   offers come from the same tail set).

The per-task backend executes these literally through the phase engine and
can audit the structural invariants after every phase; the array backend
replays the same arbitration decisions with numpy and recycles physical
storage for dead sets, so both produce the identical ordering.
"""

from __future__ import annotations

import numpy as np

from ..graph import Graph, VertexOrdering
from .engine import NULL, Arbitration, PhaseProgram, run_phase_program
from .setlist import SetList

_VECTOR_MIN_N = 128


# ---------------------------------------------------------------------------
# kernel task bodies (x is the 1-based task/vertex id)


def _kernel1(x, st: SetList, emit):
    if st.is_active(x):
        s = st.set_id(x)
        emit("old_next", x, st.next(s))
        emit("counter", s, 0)
        emit("new_next", x, st.iteration * st.n + x)
    if x == st.current:
        emit("order", st.iteration, x)
        emit("active", x, False)


def _kernel2(x, st: SetList, emit):
    if st.is_active(x) and st.adjacent(x, st.current):
        emit("next_link", st.set_id(x), st.fresh(x))
        emit("next_link", st.fresh(x), st.old(x))


def _kernel3(x, st: SetList, emit):
    if not st.is_active(x):
        return
    s = st.set_id(x)
    if st.adjacent(x, st.current):
        s = st.next(s)  # the surviving freshly spliced set
        emit("set_of", x, s)
    emit("counter", s, 1)
    emit("old_next", x, st.next(s))


def _kernel4(x, st: SetList, emit):
    if not st.is_active(x):
        return
    s = st.set_id(x)
    t = st.old(x)
    if t != NULL and st.count(t) == 0:
        succ = st.next(t)
        emit("next_link", s, succ)
    else:
        succ = st.next(s)
    if succ == NULL:
        emit("current", 0, x)


_KERNELS = (_kernel1, _kernel2, _kernel3, _kernel4)


class _Audit:
    """Checks the list-structure invariants after each kernel phase."""

    def __init__(self, st: SetList):
        self.st = st

    def __call__(self, k, st: SetList, writes):
        if k == 1:
            self._post_insert(writes)
        elif k == 2:
            self._post_move(writes)
        elif k == 3:
            self._post_delete(writes)

    def _post_insert(self, writes):
        st = self.st
        chain = st.chain_from_live()
        if st.labels is not None:
            labs = [st.labels[s] for s in chain]
            for a, b in zip(labs, labs[1:]):
                assert a < b, "labels must ascend strictly along the list"
            digit = st.n - st.iteration
            for (table, index), cands in writes.items():
                if table != "next_link" or index in st._fresh_now:
                    continue
                inserted = st.next(index)
                assert st.labels[inserted] == st.labels[index].extended(digit)

    def _post_move(self, writes):
        st = self.st
        for (table, _), cands in writes.items():
            if table == "counter":
                assert set(cands.values()) == {1}, "phase-3 counter writes must all be 1"
        members = st.live_sets()
        chain = st.chain_from_live()
        for a, b in zip(chain, chain[1:]):
            assert members.get(a, 0) or members.get(b, 0), "adjacent empty sets"

    def _post_delete(self, writes):
        st = self.st
        electors = writes.get(("current", 0))
        if electors:
            assert len({st.set_id(x) for x in electors}) == 1, (
                "every candidate for current must sit in the same set"
            )
        members = st.live_sets()
        for s in st.chain_from_live():
            assert members.get(s, 0), "empty set still reachable after deletion phase"


def _lexbfs_tasks(
    g: Graph,
    arb: Arbitration,
    *,
    workers: int = 1,
    debug_labels: bool = False,
    audit: bool = False,
    adj_reuse: bool = False,
) -> VertexOrdering:
    n = g.n
    if n == 0:
        return VertexOrdering(())
    st = SetList(g, debug_labels=debug_labels or audit, adj_reuse=adj_reuse)
    observer = _Audit(st) if audit else None
    prog = PhaseProgram(_KERNELS, n)
    for i in range(1, n + 1):
        st.begin_iteration(i)
        run_phase_program(
            prog, arb, st, workers=workers, epoch_base=(i - 1) * 4, observer=observer
        )
    return VertexOrdering(st.order)


# ---------------------------------------------------------------------------
# array backend: same decisions, physical slots recycled


def _lexbfs_vector(g: Graph, arb: Arbitration) -> VertexOrdering:
    n = g.n
    if n == 0:
        return VertexOrdering(())
    packed = g._packed
    cap = 2 * n + 8
    p_next = np.full(cap, NULL, dtype=np.int64)  # slot -> slot
    p_virt = np.zeros(cap, dtype=np.int64)  # slot -> immutable set id
    p_count = np.zeros(cap, dtype=np.uint8)
    in_use = np.zeros(cap, dtype=bool)
    in_use[0] = True
    free = list(range(cap - 1, 0, -1))  # stack; pop() yields the lowest first
    set_slot = np.zeros(n, dtype=np.int64)
    active = np.ones(n, dtype=bool)
    current = 0  # 0-based
    order = np.empty(n, dtype=np.int64)
    for i in range(1, n + 1):
        # phase 1
        act = np.flatnonzero(active)
        p_count[set_slot[act]] = 0
        order[i - 1] = current
        active[current] = False
        # phase 2
        row = np.unpackbits(packed[current], bitorder="little", count=n)
        movers = np.flatnonzero(active & (row == 1))
        if movers.size:
            mslots = set_slot[movers]
            gslots, gwin = arb.winners_grouped(
                "next_link", (i - 1) * 4 + 1, mslots, p_virt[mslots], movers + 1
            )
            k = gslots.size
            if len(free) < k:
                grow = cap
                p_next = np.concatenate([p_next, np.full(grow, NULL, dtype=np.int64)])
                p_virt = np.concatenate([p_virt, np.zeros(grow, dtype=np.int64)])
                p_count = np.concatenate([p_count, np.zeros(grow, dtype=np.uint8)])
                in_use = np.concatenate([in_use, np.zeros(grow, dtype=bool)])
                free.extend(range(cap + grow - 1, cap - 1, -1))
                cap += grow
            fresh = np.array([free.pop() for _ in range(k)], dtype=np.int64)
            p_virt[fresh] = i * n + gwin
            p_next[fresh] = p_next[gslots]
            p_count[fresh] = 0
            in_use[fresh] = True
            p_next[gslots] = fresh
            # phase 3
            set_slot[movers] = p_next[set_slot[movers]]
        act = np.flatnonzero(active)
        aslots = set_slot[act]
        p_count[aslots] = 1
        old_next = p_next[aslots]
        # phase 4
        ok = old_next != NULL
        byp = np.zeros(act.size, dtype=bool)
        byp[ok] = p_count[old_next[ok]] == 0
        if byp.any():
            p_next[aslots[byp]] = p_next[old_next[byp]]
        electors = act[p_next[aslots] == NULL]
        if electors.size:
            _, winner = arb.winners_grouped(
                "current",
                (i - 1) * 4 + 3,
                np.zeros(electors.size, dtype=np.int64),
                np.zeros(electors.size, dtype=np.int64),
                electors + 1,
            )
            current = int(winner[0]) - 1
        dead = in_use & (p_count == 0)
        if dead.any():
            slots = np.flatnonzero(dead)
            in_use[slots] = False
            free.extend(slots.tolist())
    return VertexOrdering.from_zero_based(order.tolist())


def parallel_lexbfs(
    g: Graph,
    arb: Arbitration,
    *,
    backend: str = "auto",
    workers: int = 1,
    debug_labels: bool = False,
    audit: bool = False,
    adj_reuse: bool = False,
) -> VertexOrdering:
    """LexBFS via the four barrier phases; starts at vertex 1.

    ``backend="tasks"`` runs the literal per-vertex program (required for
    ``audit``/``debug_labels``/``adj_reuse``); ``"vector"`` is the numpy
    replay. ``"auto"`` picks by size and requested features.
    """
    if backend == "auto":
        tasked = g.n < _VECTOR_MIN_N or audit or debug_labels or adj_reuse or workers > 1
        backend = "tasks" if tasked else "vector"
    if backend == "tasks":
        return _lexbfs_tasks(
            g, arb, workers=workers,
            debug_labels=debug_labels, audit=audit, adj_reuse=adj_reuse,
        )
    if backend != "vector":
        raise ValueError(f"unknown backend {backend!r}")
    if audit or debug_labels or adj_reuse:
        raise ValueError("audit, debug_labels and adj_reuse need the tasks backend")
    return _lexbfs_vector(g, arb)
