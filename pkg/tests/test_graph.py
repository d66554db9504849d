"""Graph type construction, accessors, orderings, left neighborhoods."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordalkit.errors import (
    GraphTooLarge,
    InvalidOrdering,
    InvalidVertex,
    SelfLoop,
)
from chordalkit.graph import Graph, VertexOrdering, left_neighborhoods
from helpers import c4, clique, edgeless, ordering


def test_from_edge_list_basics():
    g = Graph.from_edge_list(3, [(1, 2), (2, 3)])
    assert (g.n, g.m) == (3, 2)
    assert g.neighbors(2) == [1, 3]
    assert g.neighbors(1) == [2]
    assert g.has_edge(3, 2) and not g.has_edge(1, 3)
    assert g.degree(2) == 2


def test_duplicate_edges_collapse():
    g = Graph.from_edge_list(3, [(1, 2), (2, 1), (1, 2)])
    assert g.m == 1
    assert g.neighbors(1) == [2]


def test_c4_neighbors_sorted():
    assert c4().neighbors(1) == [2, 4]
    assert c4().m == 4


def test_empty_and_zero_vertex_graphs():
    assert edgeless(5).m == 0
    g0 = Graph.from_edge_list(0, [])
    assert g0.n == 0 and g0.m == 0


def test_vertex_validation():
    with pytest.raises(InvalidVertex):
        Graph.from_edge_list(2, [(1, 3)])
    with pytest.raises(InvalidVertex):
        Graph.from_edge_list(2, [(0, 1)])
    with pytest.raises(SelfLoop):
        Graph.from_edge_list(3, [(2, 2)])
    with pytest.raises(InvalidVertex):
        c4().neighbors(5)
    with pytest.raises(InvalidVertex):
        c4().has_edge(0, 1)


def test_size_cap():
    with pytest.raises(GraphTooLarge):
        Graph.from_edge_list(50, [], cap=49)
    # the default cap is generous but finite
    with pytest.raises(GraphTooLarge):
        Graph.from_edge_list(10**6, [])


def test_edges_iteration_ascending():
    g = c4()
    assert list(g.edges()) == [(1, 2), (1, 4), (2, 3), (3, 4)]
    u, v = g.edge_arrays()
    assert u.tolist() == [1, 1, 2, 3]
    assert v.tolist() == [2, 4, 3, 4]


def test_graph_equality_and_numpy_edge_input():
    a = Graph.from_edge_list(4, [(1, 2), (3, 4)])
    b = Graph.from_edge_list(4, np.array([[3, 4], [2, 1]]))
    assert a == b and hash(a) == hash(b)
    assert a != Graph.from_edge_list(4, [(1, 2)])


def test_adjacency_is_immutable():
    g = c4()
    with pytest.raises(ValueError):
        g._packed[0, 0] = 255


# -- VertexOrdering ------------------------------------------------------------


def test_ordering_accessors():
    o = ordering(1, 2, 4, 3)
    assert o.pi(3) == 4
    assert o.pi_inv(4) == 3
    assert list(o) == [1, 2, 4, 3]
    assert o.n == 4
    assert VertexOrdering.from_zero_based([0, 1, 3, 2]) == o


def test_ordering_validation():
    with pytest.raises(InvalidOrdering):
        VertexOrdering([1, 2, 2])
    with pytest.raises(InvalidOrdering):
        VertexOrdering([0, 1, 2])
    with pytest.raises(InvalidOrdering):
        VertexOrdering([1, 2, 5])
    with pytest.raises(InvalidOrdering):
        ordering(1, 2).pi(3)


# -- left neighborhoods ---------------------------------------------------------


def test_left_neighborhoods_on_c4():
    ln = left_neighborhoods(c4(), ordering(1, 2, 4, 3))
    assert ln.ln(3) == {2, 4}
    assert ln.parent(3) == 4
    assert ln.ln(1) == set() and ln.parent(1) is None
    assert ln.ln(2) == {1} and ln.parent(2) == 1
    assert ln.ln(4) == {1} and ln.parent(4) == 1


def test_left_neighborhoods_rejects_mismatched_ordering():
    with pytest.raises(InvalidOrdering):
        left_neighborhoods(c4(), ordering(1, 2, 3))


def test_left_neighborhood_parent_is_rightmost():
    g = clique(5)
    o = ordering(5, 3, 1, 2, 4)
    ln = left_neighborhoods(g, o)
    assert ln.parent(4) == 2  # last vertex's parent = previous in order
    assert ln.ln(4) == {5, 3, 1, 2}
    assert ln.parent(5) is None


# -- randomized invariants -------------------------------------------------------


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edge_list(n, chosen), n


@given(graphs())
def test_adjacency_symmetry_and_degree_sum(gn):
    g, n = gn
    assert sum(g.degree(v) for v in range(1, n + 1)) == 2 * g.m
    for u in range(1, n + 1):
        nbrs = g.neighbors(u)
        assert nbrs == sorted(nbrs)
        assert u not in nbrs
        for v in nbrs:
            assert g.has_edge(v, u)


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_left_neighborhood_matches_definition(gn, rnd):
    g, n = gn
    perm = list(range(1, n + 1))
    rnd.shuffle(perm)
    o = VertexOrdering(perm)
    ln = left_neighborhoods(g, o)
    for v in range(1, n + 1):
        expected = {u for u in g.neighbors(v) if o.pi_inv(u) < o.pi_inv(v)}
        assert ln.ln(v) == expected
        if expected:
            assert ln.parent(v) == max(expected, key=o.pi_inv)
        else:
            assert ln.parent(v) is None
