"""Chordal-graph recognition toolkit.

Sequential pipelines (LexBFS by label lists or partition refinement, then a
linear elimination-order test), a barrier-phase parallel reimplementation
with replayable arbitration, brute-force oracles, benchmark graph
generators and a CLI.
"""

from .errors import (
    ChordalkitError,
    GraphTooLarge,
    InvalidOrdering,
    InvalidProbability,
    InvalidSize,
    InvalidVertex,
    ParseError,
    PhaseTaskError,
    SelfLoop,
    VerdictMismatch,
)
from .generate import (
    gen_chordal_random,
    gen_clique,
    gen_dense_random,
    gen_sparse_random,
    gen_tree,
)
from .graph import Graph, LeftNeighborhood, VertexOrdering, left_neighborhoods
from .oracle import (
    PropertyCounterexample,
    find_chordless_cycle,
    is_chordal_bruteforce,
    is_peo_bruteforce,
    satisfies_b_property,
    satisfies_lb_property,
)
from .parallel import (
    Arbitration,
    parallel_is_chordal,
    parallel_lexbfs,
    parallel_peo_test,
)
from .peo import ChordalityVerdict, ScanStats, WitnessTriple, is_chordal, is_peo
from .search import (
    LOWEST_INDEX,
    LexLabel,
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

__version__ = "0.1.0"

__all__ = [
    "Arbitration",
    "ChordalityVerdict",
    "ChordalkitError",
    "Graph",
    "GraphTooLarge",
    "InvalidOrdering",
    "InvalidProbability",
    "InvalidSize",
    "InvalidVertex",
    "LOWEST_INDEX",
    "LeftNeighborhood",
    "LexLabel",
    "ParseError",
    "PhaseTaskError",
    "PropertyCounterexample",
    "ScanStats",
    "SelfLoop",
    "TieBreak",
    "VerdictMismatch",
    "VertexOrdering",
    "WitnessTriple",
    "bfs_order",
    "find_chordless_cycle",
    "gen_chordal_random",
    "gen_clique",
    "gen_dense_random",
    "gen_sparse_random",
    "gen_tree",
    "is_chordal",
    "is_chordal_bruteforce",
    "is_peo",
    "is_peo_bruteforce",
    "left_neighborhoods",
    "lexbfs_labels",
    "lexbfs_partition",
    "mcs_order",
    "parallel_is_chordal",
    "parallel_lexbfs",
    "parallel_peo_test",
    "parse_graph_text",
    "parse_ordering_text",
    "satisfies_b_property",
    "satisfies_lb_property",
    "seeded",
    "write_graph_text",
    "write_ordering_text",
]
