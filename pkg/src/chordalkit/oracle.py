"""Brute-force reference checks for orders and chordality.

Everything here favors directness over speed: the checkers translate their
defining quantifiers almost literally so they can serve as ground truth for
the efficient implementations. Size caps keep accidental misuse cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._bitops import iter_bits
from .errors import GraphTooLarge, InvalidOrdering
from .graph import Graph, VertexOrdering

_BRUTEFORCE_CAP = 256
_CYCLE_CAP = 64


@dataclass(frozen=True)
class PropertyCounterexample:
    """Positions a < b < c witnessing a failed order property.

    ``missing`` spells out the existential that could not be satisfied.
    """

    a: int
    b: int
    c: int
    va: int
    vb: int
    vc: int
    missing: str

    def positions(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return (
            f"positions (a={self.a}, b={self.b}, c={self.c}) = "
            f"vertices ({self.va}, {self.vb}, {self.vc}): {self.missing}"
        )


def _position_rows(g: Graph, ordering: VertexOrdering) -> list[int]:
    """Adjacency re-indexed by position: bit j of row i = positions i, j adjacent."""
    if ordering.n != g.n:
        raise InvalidOrdering(f"ordering over {ordering.n} vertices, graph has {g.n}")
    bits = g.adjacency_bits()
    pos0 = ordering.pos0.tolist()
    prow = [0] * g.n
    for i, v0 in enumerate(ordering.order0.tolist()):
        row = 0
        for u0 in iter_bits(bits[v0]):
            row |= 1 << pos0[u0]
        prow[i] = row
    return prow


def satisfies_b_property(
    g: Graph, ordering: VertexOrdering
) -> tuple[bool, PropertyCounterexample | None]:
    """Check the breadth-first visit property of an ordering.

    For all positions a < b < c with (a,c) an edge and (a,b) a non-edge,
    some d < a must be adjacent to b. Returns the lexicographically first
    (a, b, c) violation, 1-based.
    """
    prow = _position_rows(g, ordering)
    n = g.n
    for a in range(n):
        below_a = (1 << a) - 1
        later_nbrs = prow[a] & ~((1 << (a + 1)) - 1)
        if not later_nbrs:
            continue
        for b in range(a + 1, n):
            if prow[a] >> b & 1:
                continue
            if prow[b] & below_a:
                continue
            cs = later_nbrs & ~((1 << (b + 1)) - 1)
            if cs:
                c = (cs & -cs).bit_length() - 1
                return False, PropertyCounterexample(
                    a + 1,
                    b + 1,
                    c + 1,
                    ordering.pi(a + 1),
                    ordering.pi(b + 1),
                    ordering.pi(c + 1),
                    f"no position d < {a + 1} adjacent to position {b + 1}",
                )
    return True, None


def satisfies_lb_property(
    g: Graph, ordering: VertexOrdering
) -> tuple[bool, PropertyCounterexample | None]:
    """Check the lexicographic strengthening of the visit property.

    Same premise as :func:`satisfies_b_property`, but the witness d < a must
    be adjacent to b *and not* to c.
    """
    prow = _position_rows(g, ordering)
    n = g.n
    for a in range(n):
        below_a = (1 << a) - 1
        later_nbrs = prow[a] & ~((1 << (a + 1)) - 1)
        if not later_nbrs:
            continue
        for b in range(a + 1, n):
            if prow[a] >> b & 1:
                continue
            ds = prow[b] & below_a
            cs = later_nbrs & ~((1 << (b + 1)) - 1)
            while cs:
                low = cs & -cs
                c = low.bit_length() - 1
                cs ^= low
                if not (ds & ~prow[c]):
                    return False, PropertyCounterexample(
                        a + 1,
                        b + 1,
                        c + 1,
                        ordering.pi(a + 1),
                        ordering.pi(b + 1),
                        ordering.pi(c + 1),
                        f"no position d < {a + 1} adjacent to position {b + 1} "
                        f"but not to position {c + 1}",
                    )
    return True, None


def is_peo_bruteforce(g: Graph, ordering: VertexOrdering) -> bool:
    """True iff every vertex's left neighborhood induces a clique."""
    prow = _position_rows(g, ordering)
    for i in range(g.n):
        ln = prow[i] & ((1 << i) - 1)
        for u in iter_bits(ln):
            if ln & ~prow[u] & ~(1 << u):
                return False
    return True


def is_chordal_bruteforce(g: Graph) -> bool:
    """Chordality by greedy simplicial elimination (n capped at 256)."""
    if g.n > _BRUTEFORCE_CAP:
        raise GraphTooLarge(f"brute-force chordality capped at n={_BRUTEFORCE_CAP}")
    bits = g.adjacency_bits()
    alive = (1 << g.n) - 1
    remaining = g.n
    while remaining:
        for v in iter_bits(alive):
            nb = bits[v] & alive
            simplicial = True
            for u in iter_bits(nb):
                if nb & ~bits[u] & ~(1 << u):
                    simplicial = False
                    break
            if simplicial:
                alive &= ~(1 << v)
                remaining -= 1
                break
        else:
            return False
    return True


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """Return some chordless cycle of length >= 4 (1-based), or None.

    Searches induced paths from each start vertex s, restricted to vertices
    greater than s, so s is the cycle minimum; exploration is ascending and
    therefore deterministic. Capped at n = 64.
    """
    if g.n > _CYCLE_CAP:
        raise GraphTooLarge(f"chordless-cycle search capped at n={_CYCLE_CAP}")
    bits = g.adjacency_bits()

    def extend(s: int, path: list[int], path_mask: int, interior_adj: int) -> list[int] | None:
        last = path[-1]
        cands = bits[last] & ~path_mask & ~interior_adj
        cands &= ~((1 << (s + 1)) - 1)  # only vertices above the cycle minimum
        for u in iter_bits(cands):
            if bits[u] >> s & 1:
                if len(path) >= 3:
                    return path + [u]
                continue  # would close a triangle or chord back to s
            hit = extend(s, path + [u], path_mask | (1 << u), interior_adj | bits[last])
            if hit is not None:
                return hit
        return None

    for s in range(g.n):
        for t in iter_bits(bits[s] & ~((1 << (s + 1)) - 1)):
            hit = extend(s, [s, t], (1 << s) | (1 << t), 0)
            if hit is not None:
                return [v + 1 for v in hit]
    return None
