"""Shared graph builders and corpora for the test suite."""

from __future__ import annotations

from itertools import combinations

from chordalkit.graph import Graph, VertexOrdering

# -- small named graphs used across files ------------------------------------


def c4() -> Graph:
    """4-cycle 1-2-3-4-1: the smallest non-chordal graph."""
    return Graph.from_edge_list(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


def p3() -> Graph:
    """Path 1-2-3."""
    return Graph.from_edge_list(3, [(1, 2), (2, 3)])


def p3_relabeled() -> Graph:
    """Path with the middle vertex labeled 3: edges 1-3, 3-2."""
    return Graph.from_edge_list(3, [(1, 3), (3, 2)])


def star(n: int) -> Graph:
    """Star with center 1 and n-1 leaves."""
    return Graph.from_edge_list(n, [(1, i) for i in range(2, n + 1)])


def clique(n: int) -> Graph:
    return Graph.from_edge_list(n, list(combinations(range(1, n + 1), 2)))


def cycle(n: int) -> Graph:
    return Graph.from_edge_list(
        n, [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    )


def c5_chord_13() -> Graph:
    """5-cycle plus the chord 1-3; still contains the chordless 1-3-4-5."""
    return Graph.from_edge_list(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3)])


def edgeless(n: int) -> Graph:
    return Graph.from_edge_list(n, [])


def ordering(*vertices: int) -> VertexOrdering:
    return VertexOrdering(vertices)


# -- corpora -----------------------------------------------------------------


def all_graphs(n: int):
    """Every labeled graph on exactly n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edge_list(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def exhaustive_corpus(max_n: int = 5):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


def random_graph(n: int, seed: int) -> Graph:
    """Seeded random graph with edge probability swept over a fixed menu."""
    from chordalkit.generate import gen_dense_random

    probes = (0.15, 0.3, 0.5, 0.7, 0.85)
    return gen_dense_random(n, probes[seed % len(probes)], seed)
