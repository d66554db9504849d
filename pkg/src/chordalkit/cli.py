"""Command-line front end.

Subcommands: ``check`` (chordality verdict with timing split), ``order``
(emit a vertex ordering), ``verify`` (test an ordering against a property),
``gen`` (write a benchmark graph) and ``bench`` (the timing matrix as CSV).

Exit codes are uniform: 0 for success / chordal / property-holds, 1 for
non-chordal / property-fails, 2 for unusable input of any kind.
"""

from __future__ import annotations

import argparse
import sys
import time

from .bench import CLASSES, DEFAULT_SIZES, make_graph, rows_to_csv, run_benchmark
from .errors import ChordalkitError
from .oracle import satisfies_b_property, satisfies_lb_property
from .parallel import Arbitration, parallel_is_chordal, parallel_lexbfs
from .peo import is_chordal, is_peo
from .search import (
    LOWEST_INDEX,
    TieBreak,
    bfs_order,
    lexbfs_labels,
    lexbfs_partition,
    mcs_order,
    seeded,
)
from .textio import (
    parse_graph_text,
    parse_ordering_text,
    write_graph_text,
    write_ordering_text,
)

CHECK_ALGOS = ("seq-labels", "seq-partition", "parallel")
ORDER_ALGOS = ("bfs", "lexbfs-labels", "lexbfs-partition", "mcs", "parallel-lexbfs")
PROPERTIES = ("b", "lb", "peo")


def _tie_break(seed: int | None) -> TieBreak:
    return LOWEST_INDEX if seed is None else seeded(seed)


def _arbitration(seed: int | None) -> Arbitration:
    return Arbitration.fixed_priority() if seed is None else Arbitration.seeded(seed)


def _read(path: str) -> bytes:
    with open(path, "rb") as f:
        return f.read()


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)


def cmd_check(args: argparse.Namespace) -> int:
    data = _read(args.input)
    t0 = time.perf_counter()
    g = parse_graph_text(data)
    t1 = time.perf_counter()
    if args.algo == "parallel":
        verdict = parallel_is_chordal(g, _arbitration(args.seed), workers=args.workers)
    else:
        variant = "labels" if args.algo == "seq-labels" else "partition"
        verdict = is_chordal(g, algo=variant, tie_break=_tie_break(args.seed))
    t2 = time.perf_counter()
    print(f"chordal: {'yes' if verdict.chordal else 'no'}")
    if verdict.chordal:
        print("peo:", " ".join(str(v) for v in verdict.peo))
    else:
        w = verdict.witness
        print(f"witness: v={w.v} p={w.p} z={w.z}")
    print(f"parse ms: {(t1 - t0) * 1e3:.3f}")
    print(f"algorithm ms: {(t2 - t1) * 1e3:.3f}")
    return 0 if verdict.chordal else 1


def cmd_order(args: argparse.Namespace) -> int:
    g = parse_graph_text(_read(args.input))
    if args.algo == "parallel-lexbfs":
        order = parallel_lexbfs(g, _arbitration(args.seed), workers=args.workers)
    elif args.algo == "bfs":
        order = bfs_order(g, _tie_break(args.seed))
    elif args.algo == "mcs":
        order = mcs_order(g, _tie_break(args.seed))
    elif args.algo == "lexbfs-labels":
        order = lexbfs_labels(g, _tie_break(args.seed))
    else:
        order = lexbfs_partition(g, _tie_break(args.seed))
    _write_out(write_ordering_text(order), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph_text(_read(args.input))
    order = parse_ordering_text(_read(args.order), g.n)
    if args.property == "peo":
        ok, witness = is_peo(g, order)
        if ok:
            print("peo: yes")
            return 0
        print("peo: no")
        print(f"counterexample: v={witness.v} p={witness.p} z={witness.z}")
        return 1
    checker = satisfies_b_property if args.property == "b" else satisfies_lb_property
    ok, counterexample = checker(g, order)
    if ok:
        print(f"property {args.property}: holds")
        return 0
    print(f"property {args.property}: fails")
    print(f"counterexample: {counterexample}")
    return 1


def cmd_gen(args: argparse.Namespace) -> int:
    g = make_graph(args.cls, args.n, 0 if args.seed is None else args.seed, args.param)
    _write_out(write_graph_text(g), args.out)
    # keep stdout pipeable when the graph itself goes there
    print(f"n={g.n} m={g.m}", file=sys.stdout if args.out else sys.stderr)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    rows = run_benchmark(
        args.classes,
        args.sizes,
        reps=args.reps,
        seed=0 if args.seed is None else args.seed,
        workers=args.workers,
        param=args.param,
        arb=_arbitration(args.seed),
        log=lambda msg: print(msg, file=sys.stderr),
    )
    _write_out(rows_to_csv(rows), args.out)
    if args.out is not None:
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalkit",
        description="Chordal-graph recognition: check, order, verify, generate, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide whether a graph file is chordal")
    check.add_argument("input", help="graph file (p/e text format)")
    check.add_argument("--algo", choices=CHECK_ALGOS, default="seq-partition")
    check.add_argument("--seed", type=int, help="seeded tie-break/arbitration (default: lowest index wins)")
    check.add_argument("--workers", type=int, default=1)
    check.set_defaults(func=cmd_check)

    order = sub.add_parser("order", help="emit a vertex ordering for a graph file")
    order.add_argument("input", help="graph file (p/e text format)")
    order.add_argument("--algo", choices=ORDER_ALGOS, default="lexbfs-partition")
    order.add_argument("--seed", type=int)
    order.add_argument("--workers", type=int, default=1)
    order.add_argument("--out", help="ordering file to write (default: stdout)")
    order.set_defaults(func=cmd_order)

    verify = sub.add_parser("verify", help="test an ordering file against a property")
    verify.add_argument("input", help="graph file (p/e text format)")
    verify.add_argument("order", help="ordering file (one-line permutation)")
    verify.add_argument("property", choices=PROPERTIES)
    verify.set_defaults(func=cmd_verify)

    gen = sub.add_parser("gen", help="generate a benchmark graph file")
    gen.add_argument("cls", metavar="class", choices=CLASSES)
    gen.add_argument("n", type=int)
    gen.add_argument("--param", type=float, help="p for dense, k for chordal")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", help="graph file to write (default: stdout)")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run the timing matrix, emit CSV")
    bench.add_argument("--classes", nargs="+", choices=CLASSES, default=list(CLASSES))
    bench.add_argument("--sizes", nargs="+", type=int, default=list(DEFAULT_SIZES))
    bench.add_argument("--reps", type=int, default=3)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--param", type=float, help="p for dense, k for chordal")
    bench.add_argument("--out", help="CSV file to write (default: stdout)")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ChordalkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
