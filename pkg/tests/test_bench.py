"""Benchmark harness: matrix shape, CSV schema, verdict agreement."""

import csv
import io

import pytest

import chordalkit.bench as bench
from chordalkit.bench import (
    ALGOS,
    CLASSES,
    CSV_HEADER,
    BenchRow,
    make_graph,
    rows_to_csv,
    run_benchmark,
)
from chordalkit.errors import VerdictMismatch
from chordalkit.oracle import is_chordal_bruteforce
from chordalkit.peo import ChordalityVerdict


# -- graph factory -------------------------------------------------------------


def test_make_graph_edge_counts():
    assert make_graph("clique", 60, 0).m == 60 * 59 // 2
    assert make_graph("sparse", 50, 1).m == 20 * 50
    assert make_graph("tree", 64, 2).m == 63
    dense = make_graph("dense", 64, 3)
    assert 0 < dense.m < 64 * 63 // 2


def test_make_graph_params():
    assert make_graph("dense", 30, 0, param=1.0).m == 30 * 29 // 2
    chordal = make_graph("chordal", 32, 4, param=6)
    assert is_chordal_bruteforce(chordal)
    # oversized k is clamped to the full-clique boundary
    assert make_graph("chordal", 10, 0, param=500).m == 45


def test_make_graph_rejects_unknown_class():
    with pytest.raises(ValueError):
        make_graph("hypercube", 8, 0)


# -- matrix shape ----------------------------------------------------------------


def test_row_count_arithmetic():
    rows = run_benchmark(["clique"], [60, 80], reps=3, seed=5)
    # 2 sizes x 2 algos x 3 recorded reps, once per phase
    per_phase = [r for r in rows if r.phase == "algo"]
    assert len(per_phase) == 2 * 2 * 3
    assert len(rows) == 2 * len(per_phase)


def test_warmup_rep_not_recorded():
    rows = run_benchmark(["tree"], [50], reps=2, seed=0)
    assert {r.rep for r in rows} == {1, 2}
    assert {r.seed for r in rows} == {1, 2}  # graph seed = base seed + rep


def test_rep_timings_positive_and_labeled():
    rows = run_benchmark(["chordal"], [48], reps=2, seed=9)
    assert {r.algo for r in rows} == set(ALGOS)
    assert {r.phase for r in rows} == {"total", "algo"}
    assert all(r.ms >= 0 for r in rows)
    by_key = {(r.algo, r.rep, r.phase): r.ms for r in rows}
    for algo in ALGOS:
        for rep in (1, 2):
            assert by_key[(algo, rep, "total")] >= by_key[(algo, rep, "algo")]


def test_same_seed_reruns_identically_sized_graphs():
    a = run_benchmark(["sparse", "tree"], [50], reps=2, seed=7)
    b = run_benchmark(["sparse", "tree"], [50], reps=2, seed=7)
    assert [r.m for r in a] == [r.m for r in b]
    assert [(r.cls, r.n, r.algo, r.rep, r.seed, r.phase) for r in a] == [
        (r.cls, r.n, r.algo, r.rep, r.seed, r.phase) for r in b
    ]


def test_agreement_logged_for_every_cell_including_warmup():
    lines = []
    run_benchmark(["clique", "tree"], [40], reps=2, seed=0, log=lines.append)
    assert len(lines) == 2 * 1 * 3  # classes x sizes x (warm-up + reps)
    assert all("verdicts agree" in line for line in lines)


def test_rejects_nonpositive_reps():
    with pytest.raises(ValueError):
        run_benchmark(["tree"], [30], reps=0)


def test_disagreement_aborts(monkeypatch):
    real = bench._run_pipeline

    def sabotaged(algo, g, arb, workers):
        verdict = real(algo, g, arb, workers)
        if algo == "parallel":
            if verdict.chordal:
                from chordalkit.peo import WitnessTriple

                return ChordalityVerdict(False, witness=WitnessTriple(1, 2, 3))
            return ChordalityVerdict(True, peo=bench.parallel_is_chordal(g, arb).peo)
        return verdict

    monkeypatch.setattr(bench, "_run_pipeline", sabotaged)
    with pytest.raises(VerdictMismatch):
        run_benchmark(["clique"], [30], reps=1)


# -- CSV schema -------------------------------------------------------------------


def test_csv_header_and_typed_rows():
    rows = run_benchmark(["tree", "chordal"], [40], reps=2, seed=3)
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER == "class,n,m,algo,rep,seed,phase,ms"
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert len(parsed) == len(rows)
    for rec in parsed:
        assert rec["class"] in CLASSES
        assert int(rec["n"]) == 40
        assert int(rec["m"]) >= 0
        assert rec["algo"] in ALGOS
        assert int(rec["rep"]) in (1, 2)
        assert int(rec["seed"]) in (4, 5)
        assert rec["phase"] in ("total", "algo")
        assert float(rec["ms"]) >= 0


def test_bench_row_csv_formatting():
    row = BenchRow("clique", 10, 45, "parallel", 1, 3, "algo", 1.23456)
    assert row.csv() == "clique,10,45,parallel,1,3,algo,1.235"
