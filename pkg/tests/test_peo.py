"""Elimination-order test: frozen cases, oracle agreement, scan budget."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chordalkit.errors import InvalidOrdering
from chordalkit.graph import Graph, VertexOrdering
from chordalkit.oracle import is_chordal_bruteforce, is_peo_bruteforce
from chordalkit.peo import ChordalityVerdict, ScanStats, WitnessTriple, is_chordal, is_peo
from chordalkit.search import mcs_order, seeded

from helpers import (
    c4,
    c5_chord_13,
    clique,
    cycle,
    edgeless,
    exhaustive_corpus,
    ordering,
    p3,
    random_graph,
    star,
)

CORPUS = exhaustive_corpus(5)


# --- frozen cases ------------------------------------------------------------


def test_k4_any_order_is_peo():
    g = clique(4)
    for perm in itertools.permutations(range(1, 5)):
        assert is_peo(g, ordering(*perm)) == (True, None)


def test_c4_witness():
    ok, w = is_peo(c4(), ordering(1, 2, 4, 3))
    assert not ok
    assert (w.v, w.p, w.z) == (3, 4, 2)
    assert w.verify(c4(), ordering(1, 2, 4, 3))


def test_p3_identity_is_peo():
    assert is_peo(p3(), ordering(1, 2, 3)) == (True, None)


def test_mismatched_ordering_rejected():
    with pytest.raises(InvalidOrdering):
        is_peo(c4(), ordering(1, 2, 3))


def test_verdict_shape_enforced():
    with pytest.raises(ValueError):
        ChordalityVerdict(True)
    with pytest.raises(ValueError):
        ChordalityVerdict(False, peo=ordering(1))
    with pytest.raises(ValueError):
        ChordalityVerdict(False)


# --- pipeline verdicts ----------------------------------------------------------


def test_is_chordal_k4():
    v = is_chordal(clique(4))
    assert v.chordal and list(v.peo) == [1, 2, 3, 4] and v.witness is None


def test_is_chordal_c4():
    v = is_chordal(c4())
    assert not v.chordal and v.peo is None
    assert v.witness.verify(c4(), ordering(1, 2, 4, 3))


def test_is_chordal_star():
    assert is_chordal(star(5)).chordal


def test_is_chordal_c5_with_chord_still_not_chordal():
    assert not is_chordal(c5_chord_13()).chordal


def test_unknown_variant_rejected():
    with pytest.raises(ValueError):
        is_chordal(c4(), algo="mcs")
    with pytest.raises(ValueError):
        is_chordal(c4(), method="bogus")


# --- agreement with the definition-level oracles -----------------------------


def test_is_peo_matches_bruteforce_exhaustive():
    for g in exhaustive_corpus(4):
        for perm in itertools.permutations(range(1, g.n + 1)):
            o = ordering(*perm)
            ok, w = is_peo(g, o)
            assert ok == is_peo_bruteforce(g, o)
            if not ok:
                assert w.verify(g, o)


def test_pipeline_matches_bruteforce_exhaustive():
    for g in CORPUS:
        expected = is_chordal_bruteforce(g)
        for algo in ("partition", "labels"):
            assert is_chordal(g, algo).chordal == expected


@pytest.mark.parametrize("seed", range(10))
def test_pipeline_matches_bruteforce_seeded(seed):
    tb = seeded(seed)
    for g in exhaustive_corpus(4):
        expected = is_chordal_bruteforce(g)
        for algo in ("partition", "labels"):
            v = is_chordal(g, algo, tb)
            assert v.chordal == expected
            if not v.chordal:
                w = v.witness
                assert g.has_edge(w.v, w.p) and g.has_edge(w.v, w.z)
                assert not g.has_edge(w.p, w.z)


def test_mcs_order_detects_chordality():
    for g in CORPUS:
        assert is_peo(g, mcs_order(g))[0] == is_chordal_bruteforce(g)


# --- scan budget -----------------------------------------------------------


def test_scan_budget_on_corpus():
    for g in CORPUS:
        stats = ScanStats()
        is_peo(g, mcs_order(g), stats=stats, method="lists")
        assert stats.budget == 8 * g.m
        assert stats.within_budget()


@pytest.mark.parametrize("seed", range(4))
def test_scan_budget_random(seed):
    g = random_graph(60, seed)
    stats = ScanStats()
    is_peo(g, mcs_order(g), stats=stats, method="lists")
    assert stats.within_budget()


# --- array path equivalence -------------------------------------------------


def test_array_path_agrees_exhaustive():
    for g in CORPUS:
        for o in (mcs_order(g), ordering(*range(1, g.n + 1))):
            assert is_peo(g, o, method="array")[0] == is_peo(g, o, method="lists")[0]


@pytest.mark.parametrize("seed", range(5))
def test_array_path_agrees_random(seed):
    g = random_graph(80, seed)
    for o in (mcs_order(g), mcs_order(g, seeded(seed))):
        fast = is_peo(g, o, method="array")
        slow = is_peo(g, o, method="lists")
        assert fast == slow  # including the identical deterministic witness


def test_array_witness_is_first_in_scan_order():
    g = cycle(9)
    o = ordering(*range(1, 10))
    assert is_peo(g, o, method="array") == is_peo(g, o, method="lists")


def test_forced_array_pipeline():
    v = is_chordal(c4(), method="array")
    assert not v.chordal and (v.witness.v, v.witness.p, v.witness.z) == (3, 4, 2)
    assert is_chordal(clique(6), method="array").chordal


# --- witness structure under hypothesis ----------------------------------------


@settings(max_examples=60)
@given(st.data())
def test_witness_always_valid(data):
    n = data.draw(st.integers(2, 8))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = [pq for pq in pairs if data.draw(st.booleans())]
    g = Graph.from_edge_list(n, edges)
    perm = data.draw(st.permutations(list(range(1, n + 1))))
    o = VertexOrdering(perm)
    ok, w = is_peo(g, o)
    assert ok == is_peo_bruteforce(g, o)
    if not ok:
        assert w.verify(g, o)
        assert not is_chordal_bruteforce(g) or not ok  # witness never fabricated
