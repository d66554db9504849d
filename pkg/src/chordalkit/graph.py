"""Core graph types: immutable undirected graphs and vertex orderings.

Vertices are 1-based in the public API (arguments, return values, text
formats); internal arrays are 0-based. The adjacency matrix is the canonical
representation, stored as little-endian packed bit rows; sorted adjacency
lists and big-int bit rows are derived lazily and cached.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from ._bitops import POPCOUNT8, iter_bits, packed_to_int, row_width
from .errors import GraphTooLarge, InvalidOrdering, InvalidVertex, SelfLoop

# Refuse graphs whose bit-matrix footprint (adjacency plus the derived
# left-neighborhood rows and one working copy) would not fit comfortably.
DEFAULT_VERTEX_CAP = 20000


def _check_size(n: int, cap: int | None) -> None:
    if n < 0:
        raise InvalidVertex(f"vertex count must be non-negative, got {n}")
    limit = DEFAULT_VERTEX_CAP if cap is None else cap
    if n > limit:
        raise GraphTooLarge(f"n={n} exceeds the configured cap of {limit}")


class Graph:
    """Immutable simple undirected graph on vertices 1..n."""

    __slots__ = ("n", "m", "_packed", "_bits", "_lists0", "_degrees")

    def __init__(self, n: int, packed: np.ndarray, m: int):
        # internal constructor; use from_edge_list / generators / parsers
        self.n = n
        self.m = m
        packed.setflags(write=False)
        self._packed = packed
        self._bits: tuple[int, ...] | None = None
        self._lists0: list[list[int]] | None = None
        self._degrees: np.ndarray | None = None

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] | np.ndarray,
        *,
        cap: int | None = None,
    ) -> "Graph":
        """Build a graph from 1-based endpoint pairs.

        Duplicate edges (in either orientation) collapse to one. Endpoints
        outside 1..n raise :class:`InvalidVertex`; u == v raises
        :class:`SelfLoop`.
        """
        _check_size(n, cap)
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            return cls(n, np.zeros((n, row_width(n)), dtype=np.uint8), 0)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidVertex("edge list must consist of (u, v) pairs")
        u, v = arr[:, 0], arr[:, 1]
        if ((u < 1) | (u > n) | (v < 1) | (v > n)).any():
            bad = arr[((u < 1) | (u > n) | (v < 1) | (v > n)).argmax()]
            raise InvalidVertex(f"edge {tuple(bad)} has an endpoint outside 1..{n}")
        if (u == v).any():
            w = int(u[(u == v).argmax()])
            raise SelfLoop(f"self-loop at vertex {w}")
        return cls._from_numpy_edges(n, u, v)

    @classmethod
    def _from_numpy_edges(cls, n: int, u: np.ndarray, v: np.ndarray) -> "Graph":
        """Internal: endpoints already validated, 1-based arrays."""
        lo = np.minimum(u, v) - 1
        hi = np.maximum(u, v) - 1
        key = np.unique(lo * n + hi)
        lo = (key // n).astype(np.int64)
        hi = (key % n).astype(np.int64)
        packed = np.zeros((n, row_width(n)), dtype=np.uint8)
        np.bitwise_or.at(packed, (lo, hi >> 3), (1 << (hi & 7)).astype(np.uint8))
        np.bitwise_or.at(packed, (hi, lo >> 3), (1 << (lo & 7)).astype(np.uint8))
        return cls(n, packed, int(key.size))

    @classmethod
    def _from_packed(cls, n: int, packed: np.ndarray) -> "Graph":
        m = int(POPCOUNT8[packed].sum()) // 2
        return cls(n, packed, m)

    # -- accessors (1-based) --------------------------------------------

    def _check_vertex(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise InvalidVertex(f"vertex {v} outside 1..{self.n}")
        return v - 1

    def has_edge(self, u: int, v: int) -> bool:
        u0 = self._check_vertex(u)
        v0 = self._check_vertex(v)
        return bool(self._packed[u0, v0 >> 3] >> (v0 & 7) & 1)

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbor list of v, 1-based."""
        v0 = self._check_vertex(v)
        return [u + 1 for u in np.flatnonzero(self._row_bool(v0)).tolist()]

    def degree(self, v: int) -> int:
        v0 = self._check_vertex(v)
        return int(self.degrees()[v0])

    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = POPCOUNT8[self._packed].sum(axis=1).astype(np.int64)
        return self._degrees

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v), u < v, ascending lexicographically."""
        for i in range(self.n):
            row = self._row_bool(i)
            for j in np.flatnonzero(row[i + 1 :]).tolist():
                yield (i + 1, i + 2 + j)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges as two 1-based arrays (u, v) with u < v."""
        us, vs = [], []
        for i in range(self.n):
            row = self._row_bool(i)
            hi = np.flatnonzero(row[i + 1 :])
            if hi.size:
                us.append(np.full(hi.size, i + 1, dtype=np.int64))
                vs.append(hi.astype(np.int64) + i + 2)
        if not us:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        return np.concatenate(us), np.concatenate(vs)

    # -- internal 0-based views -----------------------------------------

    def _row_bool(self, v0: int) -> np.ndarray:
        return np.unpackbits(self._packed[v0], bitorder="little", count=self.n).astype(bool)

    def adjacency_bits(self) -> tuple[int, ...]:
        """Adjacency rows as Python-int bitsets (bit j = 0-based vertex j)."""
        if self._bits is None:
            self._bits = tuple(packed_to_int(self._packed[i]) for i in range(self.n))
        return self._bits

    def adjacency_lists0(self) -> list[list[int]]:
        """Sorted 0-based adjacency lists (cached; intended for small n)."""
        if self._lists0 is None:
            self._lists0 = [
                np.flatnonzero(self._row_bool(i)).tolist() for i in range(self.n)
            ]
        return self._lists0

    # -- misc -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._packed.tobytes() == other._packed.tobytes()

    def __hash__(self) -> int:
        return hash((self.n, self._packed.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexOrdering:
    """A permutation of 1..n, positions 1-based.

    ``pi(i)`` is the vertex at position i; ``pi_inv(v)`` its inverse.
    """

    __slots__ = ("order", "_pos", "_order0", "_pos0")

    def __init__(self, order: Sequence[int]):
        order = tuple(int(v) for v in order)
        n = len(order)
        pos = [0] * (n + 1)
        for i, v in enumerate(order):
            if not 1 <= v <= n:
                raise InvalidOrdering(f"vertex {v} outside 1..{n}")
            if pos[v]:
                raise InvalidOrdering(f"vertex {v} appears twice")
            pos[v] = i + 1
        self.order = order
        self._pos = pos
        self._order0: np.ndarray | None = None
        self._pos0: np.ndarray | None = None

    @classmethod
    def from_zero_based(cls, seq: Sequence[int]) -> "VertexOrdering":
        return cls([v + 1 for v in seq])

    @property
    def n(self) -> int:
        return len(self.order)

    def pi(self, i: int) -> int:
        """Vertex at 1-based position i."""
        if not 1 <= i <= len(self.order):
            raise InvalidOrdering(f"position {i} outside 1..{len(self.order)}")
        return self.order[i - 1]

    def pi_inv(self, v: int) -> int:
        """1-based position of vertex v."""
        if not 1 <= v <= len(self.order):
            raise InvalidOrdering(f"vertex {v} outside 1..{len(self.order)}")
        return self._pos[v]

    @property
    def order0(self) -> np.ndarray:
        if self._order0 is None:
            self._order0 = np.asarray(self.order, dtype=np.int64) - 1
            self._order0.setflags(write=False)
        return self._order0

    @property
    def pos0(self) -> np.ndarray:
        """pos0[v0] = 0-based position of 0-based vertex v0."""
        if self._pos0 is None:
            self._pos0 = np.asarray(self._pos[1:], dtype=np.int64) - 1
            self._pos0.setflags(write=False)
        return self._pos0

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __len__(self) -> int:
        return len(self.order)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexOrdering):
            return self.order == other.order
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"VertexOrdering({list(self.order)})"


class LeftNeighborhood:
    """Per-vertex earlier neighbors under a fixed ordering, plus parents.

    The parent of v is its left neighbor with the greatest position, or
    None when v has no left neighbors.
    """

    __slots__ = ("_ln_bits", "_parent0", "_ordering")

    def __init__(self, ln_bits: tuple[int, ...], parent0: tuple[int, ...], ordering: VertexOrdering):
        self._ln_bits = ln_bits
        self._parent0 = parent0
        self._ordering = ordering

    def ln(self, v: int) -> set[int]:
        """Left neighbors of v as a 1-based set."""
        if not 1 <= v <= len(self._ln_bits):
            raise InvalidVertex(f"vertex {v} outside 1..{len(self._ln_bits)}")
        return {u + 1 for u in iter_bits(self._ln_bits[v - 1])}

    def ln_bits0(self, v: int) -> int:
        return self._ln_bits[v - 1]

    def parent(self, v: int) -> int | None:
        if not 1 <= v <= len(self._parent0):
            raise InvalidVertex(f"vertex {v} outside 1..{len(self._parent0)}")
        p = self._parent0[v - 1]
        return None if p < 0 else p + 1

    @property
    def ordering(self) -> VertexOrdering:
        return self._ordering


def left_neighborhoods(g: Graph, ordering: VertexOrdering) -> LeftNeighborhood:
    """Compute every vertex's left neighborhood and parent under ordering."""
    if ordering.n != g.n:
        raise InvalidOrdering(f"ordering over {ordering.n} vertices, graph has {g.n}")
    bits = g.adjacency_bits()
    ln = [0] * g.n
    seen = 0
    for v0 in ordering.order0.tolist():
        ln[v0] = bits[v0] & seen
        seen |= 1 << v0
    pos0 = ordering.pos0
    parent0 = [-1] * g.n
    for v0 in range(g.n):
        best = -1
        for u0 in iter_bits(ln[v0]):
            if pos0[u0] > best:
                best = int(pos0[u0])
                parent0[v0] = u0
    return LeftNeighborhood(tuple(ln), tuple(parent0), ordering)
